#include <doctest.h>

#include "braidforge/correspond.hpp"
#include "test_helpers.hpp"

using namespace braidforge;
using testutil::random_scalar_seed;
using testutil::uniform_scalar_seed;
using testutil::unit;

namespace {

SemidirectRep tower_seed(int n, Rng& rng) {
    SemidirectRep base = random_scalar_seed(n, rng);
    return twisted_lm(base, {rng.unit_complex(), 1});
}

} // namespace

TEST_CASE("main theorem: i = 0 rows are exactly zero") {
    SemidirectRep rep = uniform_scalar_seed(3, unit(0.5), unit(1.0));
    CorrespondenceReport r = verify_main_theorem(rep, unit(0.9));
    for (int j = 1; j <= 3; ++j) CHECK(r.residuals.at({0, j}) == 0.0);
}

TEST_CASE("main theorem passes on scalar seeds under the shipped readings") {
    Rng rng(131);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 3);
        SemidirectRep rep = random_scalar_seed(n, rng);
        CorrespondenceReport r = verify_main_theorem(rep, rng.unit_complex());
        CHECK(r.pass);
        CHECK(r.max_residual < 1e-10);
    }
}

TEST_CASE("main theorem passes on depth-1 towers (noncommuting)") {
    Rng rng(132);
    for (int n : {2, 3, 4}) {
        SemidirectRep rep = tower_seed(n, rng);
        CorrespondenceReport r = verify_main_theorem(rep, rng.unit_complex());
        CHECK(r.pass);
        CHECK(r.max_residual < 1e-9);
    }
    // depth-2 towers stay within tolerance for every strand count
    for (int n : {2, 3, 4}) {
        SemidirectRep deep = twisted_lm(tower_seed(n, rng), {rng.unit_complex(), 1});
        CorrespondenceReport r2 = verify_main_theorem(deep, rng.unit_complex());
        CHECK(r2.pass);
        CHECK(r2.max_residual < 1e-9);
    }
}

TEST_CASE("the induction step of the proof holds under the shipped readings") {
    Rng rng(133);
    SemidirectRep rep = tower_seed(4, rng);
    const cplx lam = rng.unit_complex();
    CHECK(induction_step_residual(rep, lam, 1, 3) < 1e-12);
    CHECK(induction_step_residual(rep, lam, 1, 4) < 1e-12);
    CHECK(induction_step_residual(rep, lam, 2, 4) < 1e-12);
    // conditional structure: (i, j) passes given (i+1, j); both residuals
    // are independently small on the same instance
    CorrespondenceReport r = verify_main_theorem(rep, lam);
    CHECK(r.residuals.at({3, 4}) < 1e-9);
    CHECK(r.residuals.at({2, 4}) < 1e-9);
    CHECK(r.residuals.at({1, 4}) < 1e-9);
}

TEST_CASE("alternative readings fail on the right suites") {
    Rng rng(134);
    // scalar suite separates the sigma-word convention and the pivot
    SemidirectRep sc = random_scalar_seed(3, rng);
    const cplx lam = rng.unit_complex();
    Readings shipped;
    Readings convA{PureConvention::SigmaWord, XkReading::Corrected, PivotReading::Standard};
    Readings shifted{PureConvention::InverseTildeWord, XkReading::Corrected, PivotReading::Shifted};
    CHECK(verify_main_theorem(sc, lam, shipped).pass);
    CHECK_FALSE(verify_main_theorem(sc, lam, convA).pass);
    CHECK_FALSE(verify_main_theorem(sc, lam, shifted).pass);

    // n = 4 tower separates the X_k / mid-diagonal readings
    SemidirectRep tw = tower_seed(4, rng);
    Readings paper{PureConvention::InverseTildeWord, XkReading::PaperM0i, PivotReading::Standard};
    Readings literal{PureConvention::InverseTildeWord, XkReading::LiteralM1i, PivotReading::Standard};
    CHECK(verify_main_theorem(tw, lam, shipped).pass);
    CHECK_FALSE(verify_main_theorem(tw, lam, paper).pass);
    CHECK_FALSE(verify_main_theorem(tw, lam, literal).pass);
}

TEST_CASE("adjudicate_readings isolates the unique passing combination") {
    Rng rng(135);
    std::vector<std::pair<SemidirectRep, cplx>> suite;
    for (int n : {2, 3}) suite.push_back({random_scalar_seed(n, rng), rng.unit_complex()});
    for (int n : {3, 4}) suite.push_back({tower_seed(n, rng), rng.unit_complex()});
    AdjudicationLedger ledger = adjudicate_readings(suite);
    CHECK(ledger.pass_count == 1);
    REQUIRE(ledger.unique_pass.has_value());
    CHECK(*ledger.unique_pass == Readings{});
    CHECK(ledger.entries.size() == 12);
}

TEST_CASE("adjudication on the all-identity degenerate suite") {
    // Degenerate input cannot separate the convention or the X_k readings;
    // the shifted pivot moves the pivot to another block column, which is
    // visible even here, so exactly the standard-pivot half passes.
    SemidirectRep triv = uniform_scalar_seed(2, cplx(1.0, 0.0), cplx(1.0, 0.0));
    std::vector<std::pair<SemidirectRep, cplx>> suite = {{triv, cplx(1.0, 0.0)}};
    AdjudicationLedger ledger = adjudicate_readings(suite);
    CHECK(ledger.pass_count == 6);
    for (const auto& e : ledger.entries)
        if (!e.pass) CHECK(e.readings.pivot == PivotReading::Shifted);
}

TEST_CASE("word pair corpus certifies and evaluates coherently") {
    Rng rng(136);
    for (int n : {3, 4}) {
        SemidirectRep ref = reference_rep(n);
        auto pairs = standard_word_pairs(n);
        CHECK(pairs.size() >= 4);
        for (const auto& [w1, w2] : pairs) {
            CHECK(certify_word_pair(w1, w2, n, true, ref) < 1e-10);
            CHECK(certify_word_pair(w1, w2, n, false, ref) < 1e-10);
        }
        // a certified anti-rep from a tower satisfies the same identities
        SemidirectRep tw = tower_seed(n, rng);
        PureBraidAntiRep M = restrict_to_pure(tw);
        CHECK(verify_antirep_words(M, pairs) < 1e-9);
        // the convolution of M does as well
        PureBraidAntiRep N = haraoka_convolution(M, rng.unit_complex());
        CHECK(verify_antirep_words(N, pairs) < 1e-9);
    }
}

TEST_CASE("commuting generators sigma_12, sigma_34 in P_5 agree in both orders") {
    Rng rng(137);
    SemidirectRep tw = tower_seed(4, rng); // points 0..4 -> P_5
    PureBraidAntiRep M = restrict_to_pure(tw);
    PureWord ab = {{1, 2, 1}, {3, 4, 1}};
    PureWord ba = {{3, 4, 1}, {1, 2, 1}};
    CHECK(verify_antirep_words(M, {{ab, ba}}) < 1e-10);
}

TEST_CASE("a broken pair is detected") {
    Rng rng(138);
    SemidirectRep tw = tower_seed(3, rng);
    PureBraidAntiRep M = restrict_to_pure(tw);
    // sigma_01 and sigma_12 do not commute in P_4
    PureWord ab = {{0, 1, 1}, {1, 2, 1}};
    PureWord ba = {{1, 2, 1}, {0, 1, 1}};
    SemidirectRep ref = reference_rep(3);
    CHECK(certify_word_pair(ab, ba, 3, true, ref) > 1e-3);
    CHECK(verify_antirep_words(M, {{ab, ba}}) > 1e-3);
}
