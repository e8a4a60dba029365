#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "braidforge/hermitian.hpp"
#include "braidforge/words.hpp"

namespace braidforge {

// A representation of F_n x| B for a subgroup B of B_n, stored as the
// generator images g_j = rho(x_j) and s_i = rho(sigma_i) for i in the
// s-domain. action_exponent selects the braid action on F_n: 1 is the
// Artin action; k != 1 is the Wada exponent-k family, in which case the
// stored g_j are the images of the k-th power generators x_j^k (the
// subgroup on which the Wada action is the Artin action). An optional
// Hermitian form H asserts that the rep is unitary relative to H.
struct SemidirectRep {
    int n = 0;
    index_t N = 0;
    std::vector<CMatrix> g;     // size n
    std::map<int, CMatrix> s;   // braid index -> image, domain within 1..n-1
    long action_exponent = 1;
    bool anti = false;          // true after op_transform: words evaluate reversed
    std::optional<HermitianForm> H;

    bool full_s_domain() const {
        for (int i = 1; i <= n - 1; ++i)
            if (!s.count(i)) return false;
        return true;
    }
};

// Anti-representation of the pure braid group P_{n+1} on points 0..n,
// given by the images M_{ij} of the generators, 0 <= i < j <= n. When
// anti is set, word evaluation reverses letter order.
struct PureBraidAntiRep {
    int n = 0;
    index_t N = 0;
    std::map<std::pair<int, int>, CMatrix> M;
    bool anti = true;

    const CMatrix& at(int i, int j) const;
};

// A word in the sigma_{ij} generators of P_{n+1}.
struct PureLetter {
    int i, j;
    long exponent;
};
using PureWord = std::vector<PureLetter>;

CMatrix evaluate(const SemidirectRep& rep, const MixedWord& w);
CMatrix evaluate(const SemidirectRep& rep, const BraidWord& w);
CMatrix evaluate(const SemidirectRep& rep, const FreeWord& w);

CMatrix evaluate_anti(const PureBraidAntiRep& rep, const PureWord& w);

// Max relative residual of the semidirect compatibility relations
//   s_i g_j s_i^{-1} = rho(image of the generator under the braid action).
// For action_exponent k != 1 the stored g_j are k-th power images, so the
// relation checked is on phi^k(sigma_i)(x_j^k), whose letters all carry
// exponents divisible by k.
double check_semidirect_compat(const SemidirectRep& rep, const Tolerances& tol = {});

// Max relative residual of far-commutation and the braid relation over
// the full s-domain (throws if the domain is incomplete).
double check_braid_relations(const SemidirectRep& rep, const Tolerances& tol = {});

// Which braid word realizes M_{ij} for i >= 1:
//   SigmaWord:        M_{ij} = rho(sigma_{ij})
//   InverseTildeWord: M_{ij} = rho(inv(tilde sigma_{ij})) = rho^op(tilde sigma_{ij})
// Only InverseTildeWord satisfies the Long-Moody / Haraoka correspondence on
// noncommutative representations; it is the shipped default (see correspond).
enum class PureConvention { SigmaWord, InverseTildeWord };

// M_{0j} := g_j; M_{ij} (i >= 1) := the image of the convention's braid word.
PureBraidAntiRep restrict_to_pure(const SemidirectRep& rep,
                                  PureConvention conv = PureConvention::InverseTildeWord);

// Precomposition with group inversion: generator images are inverted and
// the variance flag flips.
PureBraidAntiRep op_transform(const PureBraidAntiRep& rep);
SemidirectRep op_transform(const SemidirectRep& rep);

// Dimension of { X : X M = M X for all M }, the nullity of the stacked
// commutator map on d^2 coordinates. 1 certifies irreducibility over C
// for semisimple (e.g. unitarizable) families.
index_t commutant_dimension(const std::vector<CMatrix>& mats, const Tolerances& tol = {});

// Dimension-1 seed: g_j = [t] for all j, s_i as given, H = [1].
// Unit modulus is enforced within tolerance unless relaxed.
SemidirectRep scalar_seed(int n, cplx t, const std::vector<cplx>& s_values,
                          bool enforce_unit = true);

// Haar-ish random unitaries (QR of a Gaussian matrix with phase fix) for
// the g_j, empty s-domain, H = I. Deterministic in the seed.
SemidirectRep random_unitary_free_rep(int n, index_t N, std::uint64_t seed);

// Deterministic RNG used by the generators above (splitmix64 + Box-Muller).
struct Rng {
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    double uniform();      // [0, 1)
    double angle();        // [0, 2 pi)
    cplx unit_complex();   // e^{i angle}
    cplx gaussian();       // standard complex Gaussian

private:
    std::uint64_t state;
};

CMatrix random_unitary(index_t N, Rng& rng);

} // namespace braidforge
