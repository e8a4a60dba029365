#include "braidforge/reps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace braidforge {

const CMatrix& PureBraidAntiRep::at(int i, int j) const {
    auto it = M.find({i, j});
    if (it == M.end())
        throw validation_error("PureBraidAntiRep: missing generator M_{" + std::to_string(i) + "," +
                               std::to_string(j) + "}");
    return it->second;
}

namespace {

const CMatrix& braid_image(const SemidirectRep& rep, int i) {
    auto it = rep.s.find(i);
    if (it == rep.s.end())
        throw validation_error("evaluate: sigma_" + std::to_string(i) + " not in the s-domain");
    return it->second;
}

} // namespace

CMatrix evaluate(const SemidirectRep& rep, const MixedWord& w) {
    if (w.n != rep.n) throw validation_error("evaluate: word rank mismatch");
    CMatrix out = CMatrix::identity(rep.N);
    auto apply = [&](const MixedToken& t) {
        if (!t.is_braid && t.index > static_cast<int>(rep.g.size()))
            throw validation_error("evaluate: rep has no free-generator images");
        const CMatrix& base = t.is_braid ? braid_image(rep, t.index)
                                         : rep.g[static_cast<size_t>(t.index - 1)];
        out = out * matrix_power(base, t.exponent);
    };
    if (rep.anti) {
        for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) apply(*it);
    } else {
        for (const auto& t : w.tokens) apply(t);
    }
    return out;
}

CMatrix evaluate(const SemidirectRep& rep, const BraidWord& w) {
    return evaluate(rep, MixedWord::from_braid(w));
}

CMatrix evaluate(const SemidirectRep& rep, const FreeWord& w) {
    return evaluate(rep, MixedWord::from_free(rep.n, w));
}

CMatrix evaluate_anti(const PureBraidAntiRep& rep, const PureWord& w) {
    CMatrix out = CMatrix::identity(rep.N);
    auto apply = [&](const PureLetter& l) { out = out * matrix_power(rep.at(l.i, l.j), l.exponent); };
    if (rep.anti) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) apply(*it);
    } else {
        for (const auto& l : w) apply(l);
    }
    return out;
}

double check_semidirect_compat(const SemidirectRep& rep, const Tolerances& tol) {
    tol.validate();
    const long k = rep.action_exponent;
    if (k == 0) throw validation_error("check_semidirect_compat: zero action exponent");
    double worst = 0.0;
    for (const auto& [i, si] : rep.s) {
        for (int j = 1; j <= rep.n; ++j) {
            const CMatrix& gj = rep.g[static_cast<size_t>(j - 1)];
            // s_i g_j s_i^{-1} = R is checked as s_i g_j = R s_i, which
            // avoids inversion noise and is exact for scalar seeds.
            const CMatrix lhs = si * gj;
            // Image of x_j^k under phi^k(sigma_i); all letter exponents are
            // multiples of k, matching the stored k-th power images.
            FreeWord target = wada_act(k, i, 1, FreeWord(rep.n, {{j, k}}));
            CMatrix rhs = CMatrix::identity(rep.N);
            for (const auto& l : target.letters) {
                if (l.exponent % k != 0)
                    throw validation_error("check_semidirect_compat: action image not in the "
                                           "power subgroup");
                rhs = rhs * matrix_power(rep.g[static_cast<size_t>(l.index - 1)], l.exponent / k);
            }
            const double den = std::max(gj.frobenius_norm(), std::numeric_limits<double>::min());
            worst = std::max(worst, (lhs - rhs * si).frobenius_norm() / den);
        }
    }
    return worst;
}

double check_braid_relations(const SemidirectRep& rep, const Tolerances& tol) {
    tol.validate();
    if (!rep.full_s_domain())
        throw validation_error("check_braid_relations: incomplete s-domain");
    double worst = 0.0;
    for (int i = 1; i <= rep.n - 1; ++i) {
        const CMatrix& si = rep.s.at(i);
        for (int j = i + 2; j <= rep.n - 1; ++j) {
            const CMatrix lhs = si * rep.s.at(j);
            const CMatrix rhs = rep.s.at(j) * si;
            worst = std::max(worst, rel_residual(lhs, rhs));
        }
        if (i + 1 <= rep.n - 1) {
            const CMatrix& sj = rep.s.at(i + 1);
            const CMatrix lhs = si * sj * si;
            const CMatrix rhs = sj * si * sj;
            worst = std::max(worst, rel_residual(lhs, rhs));
        }
    }
    return worst;
}

PureBraidAntiRep restrict_to_pure(const SemidirectRep& rep, PureConvention conv) {
    if (!rep.full_s_domain())
        throw validation_error("restrict_to_pure: full s-domain required");
    PureBraidAntiRep out;
    out.n = rep.n;
    out.N = rep.N;
    out.anti = true;
    for (int j = 1; j <= rep.n; ++j) out.M[{0, j}] = rep.g[static_cast<size_t>(j - 1)];
    for (int i = 1; i <= rep.n; ++i) {
        for (int j = i + 1; j <= rep.n; ++j) {
            const BraidWord w = conv == PureConvention::SigmaWord
                                    ? pure_braid_generator(i, j, rep.n)
                                    : invert(tilde_pure_braid_generator(i, j, rep.n));
            out.M[{i, j}] = evaluate(rep, w);
        }
    }
    return out;
}

PureBraidAntiRep op_transform(const PureBraidAntiRep& rep) {
    PureBraidAntiRep out;
    out.n = rep.n;
    out.N = rep.N;
    out.anti = !rep.anti;
    for (const auto& [key, m] : rep.M) out.M[key] = inverse(m);
    return out;
}

SemidirectRep op_transform(const SemidirectRep& rep) {
    SemidirectRep out = rep;
    out.anti = !rep.anti;
    for (auto& m : out.g) m = inverse(m);
    for (auto& [i, m] : out.s) m = inverse(m);
    return out;
}

index_t commutant_dimension(const std::vector<CMatrix>& mats, const Tolerances& tol) {
    if (mats.empty()) throw validation_error("commutant_dimension: empty list");
    const index_t d = mats[0].rows();
    for (const auto& m : mats)
        if (!m.square() || m.rows() != d)
            throw validation_error("commutant_dimension: size mismatch");
    if (d == 0) return 0;
    // Stacked map X -> (M X - X M) on d^2 coordinates, X row-major:
    // row (a,b) of block M: M(a,r) X(r,b) - X(a,c) M(c,b).
    const index_t d2 = d * d;
    CMatrix stack(static_cast<index_t>(mats.size()) * d2, d2);
    index_t r0 = 0;
    for (const auto& m : mats) {
        for (index_t a = 0; a < d; ++a) {
            for (index_t b = 0; b < d; ++b) {
                const index_t row = r0 + a * d + b;
                for (index_t r = 0; r < d; ++r) stack(row, r * d + b) += m(a, r);
                for (index_t c = 0; c < d; ++c) stack(row, a * d + c) -= m(c, b);
            }
        }
        r0 += d2;
    }
    return d2 - numerical_rank(stack, tol);
}

SemidirectRep scalar_seed(int n, cplx t, const std::vector<cplx>& s_values, bool enforce_unit) {
    if (n < 2) throw validation_error("scalar_seed: n must be >= 2");
    if (t == cplx(0.0, 0.0)) throw validation_error("scalar_seed: t must be nonzero");
    if (static_cast<int>(s_values.size()) != n - 1)
        throw validation_error("scalar_seed: need n-1 braid scalars");
    auto check_unit = [&](cplx v, const char* name) {
        if (v == cplx(0.0, 0.0)) throw validation_error(std::string("scalar_seed: zero ") + name);
        if (enforce_unit && std::abs(std::abs(v) - 1.0) > 1e-9)
            throw validation_error(std::string("scalar_seed: ") + name +
                                   " must have unit modulus (pass enforce_unit=false to relax)");
    };
    check_unit(t, "t");
    SemidirectRep rep;
    rep.n = n;
    rep.N = 1;
    rep.g.assign(static_cast<size_t>(n), CMatrix{{t}});
    for (int i = 1; i <= n - 1; ++i) {
        check_unit(s_values[static_cast<size_t>(i - 1)], "s");
        rep.s[i] = CMatrix{{s_values[static_cast<size_t>(i - 1)]}};
    }
    rep.H = make_hermitian_form(CMatrix{{cplx(1.0, 0.0)}});
    return rep;
}

std::uint64_t Rng::next() {
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::angle() { return uniform() * 2.0 * std::numbers::pi; }

cplx Rng::unit_complex() { return std::polar(1.0, angle()); }

cplx Rng::gaussian() {
    // Box-Muller; a complex Gaussian needs one radius and one angle.
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double r = std::sqrt(-std::log(u));
    return std::polar(r, angle());
}

CMatrix random_unitary(index_t N, Rng& rng) {
    CMatrix A(N, N);
    for (index_t i = 0; i < N; ++i)
        for (index_t j = 0; j < N; ++j) A(i, j) = rng.gaussian();
    // Gram-Schmidt QR with the phase fix that makes R's diagonal positive,
    // giving a Haar-ish draw.
    CMatrix Q(N, N);
    for (index_t j = 0; j < N; ++j) {
        std::vector<cplx> v(static_cast<size_t>(N));
        for (index_t i = 0; i < N; ++i) v[static_cast<size_t>(i)] = A(i, j);
        for (index_t c = 0; c < j; ++c) {
            cplx proj(0.0, 0.0);
            for (index_t i = 0; i < N; ++i) proj += std::conj(Q(i, c)) * v[static_cast<size_t>(i)];
            for (index_t i = 0; i < N; ++i) v[static_cast<size_t>(i)] -= proj * Q(i, c);
        }
        double nrm = 0.0;
        for (const auto& x : v) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) throw validation_error("random_unitary: degenerate draw");
        for (index_t i = 0; i < N; ++i) Q(i, j) = v[static_cast<size_t>(i)] / nrm;
    }
    return Q;
}

SemidirectRep random_unitary_free_rep(int n, index_t N, std::uint64_t seed) {
    if (n < 2 || N < 1) throw validation_error("random_unitary_free_rep: bad dimensions");
    Rng rng(seed);
    SemidirectRep rep;
    rep.n = n;
    rep.N = N;
    rep.g.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) rep.g.push_back(random_unitary(N, rng));
    rep.H = make_hermitian_form(CMatrix::identity(N));
    return rep;
}

} // namespace braidforge
