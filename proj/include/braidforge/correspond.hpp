#pragma once

#include <map>

#include "braidforge/klm.hpp"

namespace braidforge {

// One combination of the ambiguous readings in the correspondence between
// the twisted Long-Moody construction and the multiplicative convolution.
struct Readings {
    PureConvention convention = PureConvention::InverseTildeWord;
    XkReading xk = XkReading::Corrected;
    PivotReading pivot = PivotReading::Standard;

    friend bool operator==(const Readings&, const Readings&) = default;
};

std::string describe(const Readings& r);

// Residuals r_{ij} = ||L_{ij} - N_{ij}||_F / ||N_{ij}||_F comparing the
// op-side evaluation of the twisted LM representation against the
// convolution matrices built from the restricted anti-representation.
struct CorrespondenceReport {
    std::map<std::pair<int, int>, double> residuals;
    Readings readings;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Both sides of the theorem for every generator pair 0 <= i < j <= n.
// For i = 0 the two sides share the assembly code path under the Standard
// pivot reading, so those residuals are exactly zero.
CorrespondenceReport verify_main_theorem(const SemidirectRep& rep, cplx lambda,
                                         const Readings& readings = {},
                                         const Tolerances& tol = {});

// Conjugation identity of the theorem's induction step:
//   rho_LM(sigma_i)^{-1} N_{i+1,j} rho_LM(sigma_i) = N_{ij}.
double induction_step_residual(const SemidirectRep& rep, cplx lambda, int i, int j,
                               const Readings& readings = {});

// Word-pair coherence of an anti-representation: for pairs (w1, w2) equal
// as group elements, max ||evaluate_anti(w1) - evaluate_anti(w2)|| relative.
// Pairs must be certified equal beforehand (see certify_word_pair).
double verify_antirep_words(const PureBraidAntiRep& rep,
                            const std::vector<std::pair<PureWord, PureWord>>& pairs);

// Expands a P_{n+1} generator word into a braid word of B_{n+1}
// (points 0..n become strands 1..n+1); tilde generators when tilde is set.
BraidWord expand_pure_word(const PureWord& w, int n, bool tilde);

// Certifies a pair equal as group elements by evaluating both expansions
// under a reference representation (a depth-built tower rep of B_{n+1},
// faithful enough at desk scale). Returns the evaluation residual.
double certify_word_pair(const PureWord& w1, const PureWord& w2, int n, bool tilde,
                         const SemidirectRep& reference);

// A reference rep of B_{n+1} for certification: depth-1 twisted LM over a
// scalar seed with deterministic parameters.
SemidirectRep reference_rep(int n_points, std::uint64_t seed = 7);

// A small corpus of certified-equal word pairs in P_{n+1}: identical pairs,
// far commutations, cancellations, and full-twist centrality instances.
std::vector<std::pair<PureWord, PureWord>> standard_word_pairs(int n);

// Runs verify_main_theorem over a suite for every reading combination and
// reports which ones pass everywhere.
struct AdjudicationEntry {
    Readings readings;
    double max_residual = 0.0;
    bool pass = false;
};

struct AdjudicationLedger {
    std::vector<AdjudicationEntry> entries;
    int pass_count = 0;
    std::optional<Readings> unique_pass;
};

AdjudicationLedger adjudicate_readings(const std::vector<std::pair<SemidirectRep, cplx>>& suite,
                                       const Tolerances& tol = {});

} // namespace braidforge
