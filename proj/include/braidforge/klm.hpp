#pragma once

#include "braidforge/convolutions.hpp"

namespace braidforge {

// The invariant subspace W = K + L inside C^{Nn} and the orthonormal
// complement chart Q used to coordinatize the quotient V / W.
struct QuotientData {
    SubspaceBasis W;
    SubspaceBasis Q;

    index_t dim_w() const { return W.dim(); }
    index_t dim_quotient() const { return Q.dim(); }
};

// K = direct sum over slots j of ker(g_j - 1), embedded in C^{Nn}.
SubspaceBasis subspace_k(const std::vector<CMatrix>& g, const Tolerances& tol = {});

// L = ker(G_1 G_2 ... G_n - 1) for the convolution images G_j.
SubspaceBasis subspace_l(const std::vector<CMatrix>& G, const Tolerances& tol = {});

// ||(I - W W^dag) m W||_F / max(||m W||_F, eps): how far m maps span(W)
// outside itself.
double invariance_residual(const CMatrix& m, const SubspaceBasis& w);

// Q^dag m Q for each matrix; every matrix must leave span(W) invariant
// within max_invariance (checked, not assumed).
std::vector<CMatrix> quotient_action(const std::vector<CMatrix>& mats, const QuotientData& qd,
                                     double max_invariance = 1e-6);

// quotient_form against the complement chart of qd.
HermitianForm quotient_form(const HermitianForm& Ht, const QuotientData& qd);

struct KlmResult {
    SemidirectRep rep;       // the quotient representation
    QuotientData qd;
    SemidirectRep lm;        // the intermediate twisted-LM representation
};

// Katz-Long-Moody: twisted LM, then quotient by W = K + L. K comes from
// the input generators, L from the convolution images.
KlmResult klm(const SemidirectRep& rep, const ConvolutionParams& params,
              const Tolerances& tol = {});

struct TowerLevel {
    int level = 0;              // 1-based
    index_t dim = 0;            // dimension of this level's rep
    index_t dim_kl = 0;         // dim(K + L) quotiented away at this level
    double compat_residual = 0.0;
    double braid_residual = 0.0;
    std::optional<index_t> commutant_dim;     // of all generator images (small levels only)
    std::optional<SignatureReport> signature; // of the carried form, if any
    SemidirectRep rep;
};

struct TowerOptions {
    bool use_klm = true;        // false: plain twisted_lm per level
    index_t max_dim = 4096;     // size guard; exceeding it throws size_guard_error
    bool record_signatures = true;
    index_t commutant_max_dim = 48;   // the commutant solve is O(dim^4) memory
    index_t signature_max_dim = 512;
};

// Iterated construction; lambdas[d] drives level d+1. Stops early (without
// error) if a level degenerates to dimension 0.
std::vector<TowerLevel> tower(const SemidirectRep& seed, const std::vector<cplx>& lambdas,
                              int depth, const TowerOptions& opts = {},
                              const Tolerances& tol = {});

} // namespace braidforge
