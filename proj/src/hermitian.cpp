#include "braidforge/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace braidforge {

HermitianForm make_hermitian_form(CMatrix m) {
    if (!m.square()) throw validation_error("HermitianForm: non-square matrix");
    if (!m.is_finite()) throw validation_error("HermitianForm: non-finite entries");
    const double hn = m.frobenius_norm();
    const double res = hn > 0.0 ? (m - m.adjoint()).frobenius_norm() / hn : 0.0;
    return {std::move(m), res};
}

HermitianForm build_h_tilde(const std::vector<CMatrix>& g, const HermitianForm& H, cplx lambda,
                            bool strict, const Tolerances& tol) {
    if (g.empty()) throw validation_error("build_h_tilde: empty generator list");
    const index_t n = static_cast<index_t>(g.size());
    const index_t N = g[0].rows();
    for (const auto& m : g)
        if (!m.square() || m.rows() != N)
            throw validation_error("build_h_tilde: generators must be square of equal size");
    if (H.matrix.rows() != N) throw validation_error("build_h_tilde: H size mismatch");
    if (H.hermiticity_residual > tol.residual_rel && H.matrix.frobenius_norm() > 0.0)
        throw validation_error("build_h_tilde: H not Hermitian within tolerance");

    const bool unit_lambda = std::abs(std::abs(lambda) - 1.0) <= tol.residual_rel;
    const cplx root = std::sqrt(lambda); // principal branch, arg in (-pi, pi]
    const CMatrix I = CMatrix::identity(N);

    std::vector<CMatrix> ginv;
    ginv.reserve(static_cast<size_t>(n));
    for (const auto& m : g) ginv.push_back(inverse(m));

    CMatrix Ht(N * n, N * n);
    for (index_t j = 1; j <= n; ++j) {
        for (index_t k = 1; k <= n; ++k) {
            const cplx ljk = j <= k ? cplx(1.0, 0.0) / root : root;
            const cplx lamjk = j == k ? lambda : cplx(1.0, 0.0);
            CMatrix blk = ljk * (H.matrix * (ginv[static_cast<size_t>(j - 1)] - lamjk * I) *
                                 (g[static_cast<size_t>(k - 1)] - I));
            Ht.set_block((j - 1) * N, (k - 1) * N, blk);
        }
    }
    HermitianForm out = make_hermitian_form(std::move(Ht));
    if (strict && unit_lambda && out.hermiticity_residual > tol.residual_rel)
        throw validation_error("build_h_tilde: result not Hermitian; generators are "
                               "likely not unitary relative to H");
    return out;
}

double check_unitary(const std::vector<CMatrix>& mats, const HermitianForm& H) {
    const double hn = std::max(H.matrix.frobenius_norm(), std::numeric_limits<double>::min());
    double worst = 0.0;
    for (const auto& m : mats) {
        if (m.rows() != H.matrix.rows())
            throw validation_error("check_unitary: size mismatch");
        worst = std::max(worst, (congruence(H.matrix, m) - H.matrix).frobenius_norm() / hn);
    }
    return worst;
}

std::pair<double, double> annihilation_check(const HermitianForm& Ht, const SubspaceBasis& K,
                                             const SubspaceBasis& L) {
    if (K.ambient_dim != Ht.dim() || L.ambient_dim != Ht.dim())
        throw validation_error("annihilation_check: ambient dimension mismatch");
    const double hn = std::max(Ht.matrix.frobenius_norm(), std::numeric_limits<double>::min());
    const double rk = K.dim() ? (Ht.matrix * K.basis).frobenius_norm() / hn : 0.0;
    const double rl = L.dim() ? (Ht.matrix * L.basis).frobenius_norm() / hn : 0.0;
    return {rk, rl};
}

KernelKlReport kernel_equals_kl(const HermitianForm& Ht, const SubspaceBasis& W,
                                const Tolerances& tol, double angle_tol) {
    SubspaceBasis ker = kernel_basis(Ht.matrix, tol);
    KernelKlReport rep;
    rep.dim_kernel = ker.dim();
    rep.dim_w = W.dim();
    rep.max_angle = (ker.dim() == W.dim()) ? max_principal_angle(ker, W) : std::acos(0.0);
    rep.pass = ker.dim() == W.dim() && rep.max_angle <= angle_tol;
    return rep;
}

HermitianForm quotient_form_on(const HermitianForm& Ht, const SubspaceBasis& Q) {
    if (Q.ambient_dim != Ht.dim())
        throw validation_error("quotient_form_on: ambient dimension mismatch");
    return make_hermitian_form(congruence(Ht.matrix, Q.basis));
}

Inertia signature_oracle(const HermitianForm& H, const Tolerances& tol) {
    return hermitian_inertia(H.matrix, tol);
}

SignatureReport signature_recursive(const HermitianForm& Ht, index_t block_size,
                                    const Tolerances& tol) {
    tol.validate();
    const index_t dim = Ht.dim();
    if (block_size < 1 || dim % block_size != 0)
        throw validation_error("signature_recursive: size not divisible by block size");
    const double hn = Ht.matrix.frobenius_norm();
    if (hn > 0.0 && Ht.hermiticity_residual > tol.residual_rel)
        throw validation_error("signature_recursive: input not Hermitian within tolerance");

    SignatureReport rep;
    rep.oracle = hermitian_inertia(Ht.matrix, tol);

    // Global scales: eigenvalue threshold for pivot splitting and the
    // Frobenius scale for the off-diagonal kernel test. Schur steps are
    // congruences, so thresholds relative to the original matrix stay valid.
    const auto all_ev = hermitian_eigenvalues(Ht.matrix);
    double emax = 0.0;
    for (double v : all_ev) emax = std::max(emax, std::abs(v));
    const double tau = tol.rank_rel * emax;
    const double fro_scale = std::max(hn, std::numeric_limits<double>::min());

    const index_t N = block_size;
    CMatrix cur = Ht.matrix;
    while (cur.rows() > 0) {
        const index_t d = cur.rows();
        CMatrix lead = cur.block(0, 0, N, N);
        auto [ev, U] = hermitian_eigensystem(lead);

        index_t nz = 0;
        for (index_t c = 0; c < N; ++c)
            if (std::abs(ev[static_cast<size_t>(c)]) > tau) ++nz;
        // eigenvalues ascend; nonzero ones sit at both ends.
        CMatrix u1(N, nz), u0(N, N - nz);
        index_t c1 = 0, c0 = 0;
        index_t ps = 0, qs = 0;
        for (index_t c = 0; c < N; ++c) {
            const double v = ev[static_cast<size_t>(c)];
            if (std::abs(v) > tau) {
                u1.set_block(0, c1++, U.block(0, c, N, 1));
                if (v > 0) ++ps; else ++qs;
            } else {
                u0.set_block(0, c0++, U.block(0, c, N, 1));
            }
        }

        SignatureStep step;
        step.block_dim = N;
        step.nonzero_count = nz;
        step.pivot_p = ps;
        step.pivot_q = qs;

        const CMatrix off = cur.block(0, N, N, d - N);
        if (u0.cols() > 0 && off.cols() > 0) {
            step.offdiag_kernel_residual = (u0.adjoint() * off).frobenius_norm() / fro_scale;
        }
        if (step.offdiag_kernel_residual > tol.residual_rel) {
            // The zero part of the leading block couples to the rest; the
            // elimination step is not justified. Finish on the untouched
            // remainder, whose inertia is exact by congruence invariance.
            rep.steps.push_back(step);
            rep.fallback_used = true;
            Inertia rest = hermitian_inertia(cur, tol);
            rep.inertia.p += rest.p;
            rep.inertia.q += rest.q;
            rep.inertia.z += rest.z;
            return rep;
        }

        rep.inertia.p += ps;
        rep.inertia.q += qs;
        rep.inertia.z += N - nz;
        rep.steps.push_back(step);

        CMatrix rest = cur.block(N, N, d - N, d - N);
        if (nz > 0 && off.cols() > 0) {
            const CMatrix pivot = congruence(lead, u1); // u1^dag A11 u1, invertible
            const CMatrix B = u1.adjoint() * off;
            rest -= B.adjoint() * solve(pivot, B);
        }
        cur = std::move(rest);
    }
    return rep;
}

} // namespace braidforge
