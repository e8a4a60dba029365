#include "braidforge/klm.hpp"

#include <algorithm>
#include <limits>

namespace braidforge {

SubspaceBasis subspace_k(const std::vector<CMatrix>& g, const Tolerances& tol) {
    if (g.empty()) throw validation_error("subspace_k: empty generator list");
    const index_t N = g[0].rows();
    const index_t n = static_cast<index_t>(g.size());
    std::vector<CMatrix> slot_bases;
    index_t total = 0;
    for (const auto& m : g) {
        if (!m.square() || m.rows() != N)
            throw validation_error("subspace_k: generators must be square of equal size");
        SubspaceBasis kb = kernel_basis(m - CMatrix::identity(N), tol);
        total += kb.dim();
        slot_bases.push_back(kb.basis);
    }
    // Slot embeddings are mutually orthogonal, so concatenation stays
    // orthonormal.
    CMatrix basis(N * n, total);
    index_t col = 0;
    for (index_t j = 0; j < n; ++j) {
        const CMatrix& b = slot_bases[static_cast<size_t>(j)];
        basis.set_block(j * N, col, b);
        col += b.cols();
    }
    return {N * n, basis};
}

SubspaceBasis subspace_l(const std::vector<CMatrix>& G, const Tolerances& tol) {
    if (G.empty()) throw validation_error("subspace_l: empty list");
    const index_t d = G[0].rows();
    CMatrix prod = CMatrix::identity(d);
    for (const auto& m : G) {
        if (!m.square() || m.rows() != d)
            throw validation_error("subspace_l: size mismatch");
        prod = prod * m;
    }
    return kernel_basis(prod - CMatrix::identity(d), tol);
}

double invariance_residual(const CMatrix& m, const SubspaceBasis& w) {
    if (m.cols() != w.ambient_dim)
        throw validation_error("invariance_residual: dimension mismatch");
    if (w.dim() == 0) return 0.0;
    const CMatrix mw = m * w.basis;
    const CMatrix outside = mw - w.basis * (w.basis.adjoint() * mw);
    return outside.frobenius_norm() /
           std::max(mw.frobenius_norm(), std::numeric_limits<double>::min());
}

std::vector<CMatrix> quotient_action(const std::vector<CMatrix>& mats, const QuotientData& qd,
                                     double max_invariance) {
    std::vector<CMatrix> out;
    out.reserve(mats.size());
    for (const auto& m : mats) {
        const double r = invariance_residual(m, qd.W);
        if (r > max_invariance)
            throw validation_error("quotient_action: subspace not invariant (residual " +
                                   std::to_string(r) + ")");
        out.push_back(congruence(m, qd.Q.basis));
    }
    return out;
}

HermitianForm quotient_form(const HermitianForm& Ht, const QuotientData& qd) {
    if (qd.W.dim() > 0) {
        const double hn = std::max(Ht.matrix.frobenius_norm(), std::numeric_limits<double>::min());
        const double ann = (Ht.matrix * qd.W.basis).frobenius_norm() / hn;
        if (ann > 1e-6)
            throw validation_error("quotient_form: the form does not annihilate W (residual " +
                                   std::to_string(ann) + ")");
    }
    return quotient_form_on(Ht, qd.Q);
}

KlmResult klm(const SemidirectRep& rep, const ConvolutionParams& params, const Tolerances& tol) {
    KlmResult result;
    result.lm = twisted_lm(rep, params);

    const SubspaceBasis K = subspace_k(rep.g, tol);
    const SubspaceBasis L = subspace_l(result.lm.g, tol);
    result.qd.W = subspace_sum(K, L, tol);
    result.qd.Q = orthogonal_complement(result.qd.W, tol);

    std::vector<CMatrix> all = result.lm.g;
    for (const auto& [i, m] : result.lm.s) all.push_back(m);
    std::vector<CMatrix> quot = quotient_action(all, result.qd);

    SemidirectRep& q = result.rep;
    q.n = rep.n;
    q.N = result.qd.dim_quotient();
    q.action_exponent = result.lm.action_exponent;
    q.g.assign(quot.begin(), quot.begin() + rep.n);
    size_t idx = static_cast<size_t>(rep.n);
    for (const auto& [i, m] : result.lm.s) {
        (void)m;
        q.s[i] = quot[idx++];
    }
    if (result.lm.H) q.H = quotient_form(*result.lm.H, result.qd);
    return result;
}

std::vector<TowerLevel> tower(const SemidirectRep& seed, const std::vector<cplx>& lambdas,
                              int depth, const TowerOptions& opts, const Tolerances& tol) {
    if (depth < 1) throw validation_error("tower: depth must be >= 1");
    if (static_cast<int>(lambdas.size()) < depth)
        throw validation_error("tower: need one lambda per level");

    std::vector<TowerLevel> levels;
    SemidirectRep cur = seed;
    for (int d = 0; d < depth; ++d) {
        if (cur.N * cur.n > opts.max_dim)
            throw size_guard_error("tower: dimension " + std::to_string(cur.N * cur.n) +
                                   " exceeds guard " + std::to_string(opts.max_dim));
        ConvolutionParams params{lambdas[static_cast<size_t>(d)], 1};

        TowerLevel lvl;
        lvl.level = d + 1;
        if (opts.use_klm) {
            KlmResult r = klm(cur, params, tol);
            lvl.dim_kl = r.qd.dim_w();
            lvl.rep = std::move(r.rep);
        } else {
            lvl.rep = twisted_lm(cur, params);
        }
        lvl.dim = lvl.rep.N;
        if (lvl.dim > 0) {
            lvl.compat_residual = check_semidirect_compat(lvl.rep, tol);
            if (lvl.rep.full_s_domain())
                lvl.braid_residual = check_braid_relations(lvl.rep, tol);
            if (lvl.dim <= opts.commutant_max_dim) {
                std::vector<CMatrix> all = lvl.rep.g;
                for (const auto& [i, m] : lvl.rep.s) all.push_back(m);
                lvl.commutant_dim = commutant_dimension(all, tol);
            }
            if (opts.record_signatures && lvl.rep.H && lvl.dim <= opts.signature_max_dim &&
                lvl.rep.H->hermiticity_residual <= tol.residual_rel)
                lvl.signature = signature_recursive(*lvl.rep.H, 1, tol);
        }
        const bool degenerate = lvl.dim == 0;
        cur = lvl.rep;
        levels.push_back(std::move(lvl));
        if (degenerate) break; // handled gracefully, not an error
    }
    return levels;
}

} // namespace braidforge
