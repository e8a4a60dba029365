#pragma once

#include <optional>
#include <vector>

#include "braidforge/linalg.hpp"

namespace braidforge {

// A (possibly degenerate) Hermitian form together with its measured
// deviation from exact Hermitian symmetry.
struct HermitianForm {
    CMatrix matrix;
    double hermiticity_residual = 0.0;

    index_t dim() const { return matrix.rows(); }
};

// Wraps a matrix, measuring ||m - m^dag||_F / ||m||_F.
HermitianForm make_hermitian_form(CMatrix m);

// The monodromy-invariant form on V^{oplus n}:
//   block (j,k) = lambda^{jk} H (g_j^{-1} - lambda_{jk} I)(g_k - I)
// with lambda^{jk} = lambda^{-1/2} for j <= k and lambda^{1/2} for j > k
// (principal branch), lambda_{jk} = lambda iff j = k, else 1.
// When |lambda| = 1 and every g_j is unitary relative to H the result is
// Hermitian; `strict` rejects a non-Hermitian result in that case. For
// non-unit |lambda| the construction proceeds unchecked.
HermitianForm build_h_tilde(const std::vector<CMatrix>& g, const HermitianForm& H, cplx lambda,
                            bool strict = true, const Tolerances& tol = {});

// max over mats of ||m^dag H m - H||_F / ||H||_F.
double check_unitary(const std::vector<CMatrix>& mats, const HermitianForm& H);

// (||Ht K||_F, ||Ht L||_F), each normalized by ||Ht||_F.
std::pair<double, double> annihilation_check(const HermitianForm& Ht, const SubspaceBasis& K,
                                             const SubspaceBasis& L);

struct KernelKlReport {
    index_t dim_kernel = 0;
    index_t dim_w = 0;
    double max_angle = 0.0;
    bool pass = false;
};

// Compares ker(Ht) against the subspace W = K + L: equal dimensions and
// principal angles below angle_tol.
KernelKlReport kernel_equals_kl(const HermitianForm& Ht, const SubspaceBasis& W,
                                const Tolerances& tol = {}, double angle_tol = 1e-6);

// Restriction of the form to the complement chart Q: Q^dag Ht Q.
HermitianForm quotient_form_on(const HermitianForm& Ht, const SubspaceBasis& Q);

// One elimination step of the recursive signature algorithm.
struct SignatureStep {
    index_t block_dim = 0;      // size of the leading block at this step
    index_t nonzero_count = 0;  // rank of its pivot part
    index_t pivot_p = 0;
    index_t pivot_q = 0;
    double offdiag_kernel_residual = 0.0; // ||u_0^dag [A_12 .. A_1n]||_F / scale
};

struct SignatureReport {
    Inertia inertia;                  // result of the recursive algorithm
    std::vector<SignatureStep> steps;
    bool fallback_used = false;
    Inertia oracle;                   // always computed, direct eigenvalue inertia

    bool agrees() const { return inertia == oracle; }
};

// The recursive block-diagonalization signature algorithm: eigendecompose
// the leading N x N block, split off the invertible pivot, eliminate it by
// a Schur congruence, accumulate pivot inertias. The zero eigenvector part
// must annihilate the off-diagonal block row; if it does not (beyond
// residual_rel of the overall scale) the algorithm falls back to direct
// inertia on the untouched remainder. The oracle triple is always computed.
SignatureReport signature_recursive(const HermitianForm& Ht, index_t block_size,
                                    const Tolerances& tol = {});

// Direct eigenvalue inertia (the independent oracle path).
Inertia signature_oracle(const HermitianForm& H, const Tolerances& tol = {});

} // namespace braidforge
