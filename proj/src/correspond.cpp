#include "braidforge/correspond.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace braidforge {

std::string describe(const Readings& r) {
    std::ostringstream os;
    os << (r.convention == PureConvention::InverseTildeWord ? "M=rho(inv(tilde sigma_ij))"
                                                            : "M=rho(sigma_ij)");
    os << ", X_k=";
    switch (r.xk) {
    case XkReading::Corrected: os << "corrected"; break;
    case XkReading::PaperM0i: os << "paper-M0i"; break;
    case XkReading::LiteralM1i: os << "literal-M1i"; break;
    }
    os << ", pivot=" << (r.pivot == PivotReading::Standard ? "lambda*M0j" : "lambda*M0,j-1");
    return os.str();
}

namespace {

BraidWord convention_word(PureConvention conv, int i, int j, int n) {
    return conv == PureConvention::SigmaWord ? pure_braid_generator(i, j, n)
                                             : invert(tilde_pure_braid_generator(i, j, n));
}

} // namespace

CorrespondenceReport verify_main_theorem(const SemidirectRep& rep, cplx lambda,
                                         const Readings& readings, const Tolerances& tol) {
    if (!rep.full_s_domain())
        throw validation_error("verify_main_theorem: full s-domain required");
    CorrespondenceReport report;
    report.readings = readings;
    report.tolerance = tol.residual_rel;

    const PureBraidAntiRep M = restrict_to_pure(rep, readings.convention);
    const SemidirectRep lm = twisted_lm(rep, {lambda, 1});
    std::vector<CMatrix> M0;
    for (int j = 1; j <= rep.n; ++j) M0.push_back(M.at(0, j));

    for (int i = 0; i <= rep.n; ++i) {
        for (int j = i + 1; j <= rep.n; ++j) {
            CMatrix lhs, rhs;
            if (i == 0) {
                rhs = haraoka_n0j(M0, lambda, j, readings.pivot);
                lhs = lm.g[static_cast<size_t>(j - 1)];
            } else {
                rhs = haraoka_nij(M, lambda, i, j, readings.xk);
                lhs = evaluate(lm, convention_word(readings.convention, i, j, rep.n));
            }
            report.residuals[{i, j}] = rel_residual(lhs, rhs);
        }
    }
    for (const auto& [key, r] : report.residuals) report.max_residual = std::max(report.max_residual, r);
    report.pass = report.max_residual <= report.tolerance;
    return report;
}

double induction_step_residual(const SemidirectRep& rep, cplx lambda, int i, int j,
                               const Readings& readings) {
    if (!(1 <= i && i + 1 < j && j <= rep.n))
        throw validation_error("induction_step_residual: need 1 <= i < i+1 < j <= n");
    const PureBraidAntiRep M = restrict_to_pure(rep, readings.convention);
    const CMatrix Nij = haraoka_nij(M, lambda, i, j, readings.xk);
    const CMatrix Ni1j = haraoka_nij(M, lambda, i + 1, j, readings.xk);
    SemidirectRep withLambda = rep;
    const CMatrix S = lm_sigma(withLambda, i);
    return rel_residual(inverse(S) * Ni1j * S, Nij);
}

double verify_antirep_words(const PureBraidAntiRep& rep,
                            const std::vector<std::pair<PureWord, PureWord>>& pairs) {
    double worst = 0.0;
    for (const auto& [w1, w2] : pairs) {
        const CMatrix a = evaluate_anti(rep, w1);
        const CMatrix b = evaluate_anti(rep, w2);
        worst = std::max(worst, rel_residual(a, b));
    }
    return worst;
}

BraidWord expand_pure_word(const PureWord& w, int n, bool tilde) {
    // P_{n+1} points 0..n map to B_{n+1} strands 1..n+1.
    std::vector<BraidLetter> letters;
    for (const auto& l : w) {
        BraidWord gen = tilde ? tilde_pure_braid_generator(l.i + 1, l.j + 1, n + 1)
                              : pure_braid_generator(l.i + 1, l.j + 1, n + 1);
        if (l.exponent < 0) gen = invert(gen);
        const long reps = std::abs(l.exponent);
        for (long c = 0; c < reps; ++c)
            letters.insert(letters.end(), gen.letters.begin(), gen.letters.end());
    }
    return BraidWord(n + 1, std::move(letters));
}

SemidirectRep reference_rep(int n_points, std::uint64_t seed) {
    Rng rng(seed);
    const int strands = n_points + 1;
    std::vector<cplx> s(static_cast<size_t>(strands - 1), rng.unit_complex());
    SemidirectRep base = scalar_seed(strands, rng.unit_complex(), s);
    return twisted_lm(base, {rng.unit_complex(), 1});
}

double certify_word_pair(const PureWord& w1, const PureWord& w2, int n, bool tilde,
                         const SemidirectRep& reference) {
    const CMatrix a = evaluate(reference, expand_pure_word(w1, n, tilde));
    const CMatrix b = evaluate(reference, expand_pure_word(w2, n, tilde));
    return rel_residual(a, b);
}

std::vector<std::pair<PureWord, PureWord>> standard_word_pairs(int n) {
    std::vector<std::pair<PureWord, PureWord>> pairs;
    // identical pair
    pairs.push_back({{{0, 1, 1}}, {{0, 1, 1}}});
    // cancellation
    pairs.push_back({{{0, 2, 1}, {0, 2, -1}, {1, 2, 1}}, {{1, 2, 1}}});
    // far commutation: disjoint index ranges commute letterwise
    for (int a = 0; a + 1 <= n; ++a) {
        for (int c = a + 2; c + 1 <= n; ++c) {
            PureWord ab = {{a, a + 1, 1}, {c, c + 1, 1}};
            PureWord ba = {{c, c + 1, 1}, {a, a + 1, 1}};
            pairs.push_back({ab, ba});
        }
    }
    // full twist of the first three points is central among their generators
    if (n >= 2) {
        const PureWord z = {{1, 2, 1}, {0, 2, 1}, {0, 1, 1}};
        for (const PureLetter w : {PureLetter{0, 1, 1}, PureLetter{1, 2, -1}, PureLetter{0, 2, 1}}) {
            PureWord zw = z;
            zw.push_back(w);
            PureWord wz = {w};
            wz.insert(wz.end(), z.begin(), z.end());
            pairs.push_back({zw, wz});
        }
    }
    return pairs;
}

AdjudicationLedger adjudicate_readings(const std::vector<std::pair<SemidirectRep, cplx>>& suite,
                                       const Tolerances& tol) {
    AdjudicationLedger ledger;
    for (PureConvention conv : {PureConvention::SigmaWord, PureConvention::InverseTildeWord}) {
        for (XkReading xk : {XkReading::Corrected, XkReading::PaperM0i, XkReading::LiteralM1i}) {
            for (PivotReading pivot : {PivotReading::Standard, PivotReading::Shifted}) {
                AdjudicationEntry entry;
                entry.readings = {conv, xk, pivot};
                entry.pass = true;
                for (const auto& [rep, lambda] : suite) {
                    const auto report = verify_main_theorem(rep, lambda, entry.readings, tol);
                    entry.max_residual = std::max(entry.max_residual, report.max_residual);
                    entry.pass = entry.pass && report.pass;
                }
                if (entry.pass) {
                    ++ledger.pass_count;
                    ledger.unique_pass = entry.readings;
                }
                ledger.entries.push_back(entry);
            }
        }
    }
    if (ledger.pass_count != 1) ledger.unique_pass.reset();
    return ledger;
}

} // namespace braidforge
