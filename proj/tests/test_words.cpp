#include <doctest.h>

#include <algorithm>

#include "braidforge/words.hpp"
#include "test_helpers.hpp"

using namespace braidforge;

namespace {

FreeWord gen(int n, int j) { return FreeWord(n, {{j, 1}}); }

} // namespace

TEST_CASE("artin_act on generators matches the action table") {
    // theta_{sigma_1}(x_1) = x_2
    CHECK(artin_act(1, 1, gen(3, 1)) == gen(3, 2));
    // theta_{sigma_1}(x_2) = x_2^{-1} x_1 x_2
    CHECK(artin_act(1, 1, gen(3, 2)) == FreeWord(3, {{2, -1}, {1, 1}, {2, 1}}));
    // theta_{sigma_2}(x_5) = x_5 in F_5
    CHECK(artin_act(2, 1, gen(5, 5)) == gen(5, 5));
}

TEST_CASE("artin_act inverse undoes the action") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng.next() % 3);
        std::vector<FreeLetter> ls;
        for (int c = 0; c < 6; ++c)
            ls.push_back({1 + static_cast<int>(rng.next() % n),
                          static_cast<long>(rng.next() % 5) - 2});
        FreeWord w(n, ls);
        const int i = 1 + static_cast<int>(rng.next() % (n - 1));
        CHECK(artin_act(i, -1, artin_act(i, 1, w)) == w);
        CHECK(artin_act(i, 1, artin_act(i, -1, w)) == w);
    }
}

TEST_CASE("wada_act generalizes artin_act") {
    // phi^2(sigma_1)(x_2) = x_2^{-2} x_1 x_2^2
    CHECK(wada_act(2, 1, 1, gen(2, 2)) == FreeWord(2, {{2, -2}, {1, 1}, {2, 2}}));
    // phi^k(sigma_1)(x_1) = x_2 for every k
    for (long k : {-3L, -1L, 2L, 5L}) CHECK(wada_act(k, 1, 1, gen(2, 1)) == gen(2, 2));
    CHECK_THROWS_AS(wada_act(0, 1, 1, gen(2, 1)), validation_error);

    // k = 1 coincides with artin_act on random words
    Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<FreeLetter> ls;
        for (int c = 0; c < 5; ++c)
            ls.push_back({1 + static_cast<int>(rng.next() % 4),
                          static_cast<long>(rng.next() % 7) - 3});
        FreeWord w(4, ls);
        const int i = 1 + static_cast<int>(rng.next() % 3);
        CHECK(wada_act(1, i, 1, w) == artin_act(i, 1, w));
    }
    for (long k : {-3L, -2L, -1L, 2L, 3L}) {
        CHECK(wada_act(k, 1, -1, wada_act(k, 1, 1, gen(3, 2))) == gen(3, 2));
        CHECK(wada_act(k, 1, 1, wada_act(k, 1, -1, gen(3, 1))) == gen(3, 1));
    }
}

TEST_CASE("actions respect the braid relations on generators") {
    // theta_{sigma_i sigma_{i+1} sigma_i} = theta_{sigma_{i+1} sigma_i sigma_{i+1}},
    // exhaustively over generators for n <= 6 and Wada exponents -3..3.
    for (long k = -3; k <= 3; ++k) {
        if (k == 0) continue;
        for (int n = 3; n <= 6; ++n) {
            for (int i = 1; i + 1 <= n - 1; ++i) {
                BraidWord lhs(n, {{i, 1}, {i + 1, 1}, {i, 1}});
                BraidWord rhs(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
                for (int j = 1; j <= n; ++j)
                    CHECK(braid_act(k, lhs, gen(n, j)) == braid_act(k, rhs, gen(n, j)));
            }
            for (int i = 1; i <= n - 1; ++i) {
                for (int j2 = i + 2; j2 <= n - 1; ++j2) {
                    BraidWord lhs(n, {{i, 1}, {j2, 1}});
                    BraidWord rhs(n, {{j2, 1}, {i, 1}});
                    for (int j = 1; j <= n; ++j)
                        CHECK(braid_act(k, lhs, gen(n, j)) == braid_act(k, rhs, gen(n, j)));
                }
            }
        }
    }
}

TEST_CASE("free reduction is confluent") {
    // Any interleaving of the same letters reduces to the same word.
    std::vector<FreeLetter> ls = {{1, 2}, {1, -1}, {2, 1}, {2, -1}, {1, -1}, {3, 4}};
    FreeWord direct(3, ls);
    FreeWord incremental;
    incremental.rank = 3;
    for (const auto& l : ls) incremental.append(l.index, l.exponent);
    CHECK(direct == incremental);
    CHECK(direct == FreeWord(3, {{3, 4}}));

    FreeWord cancel(2, {{1, 1}, {2, 1}, {2, -1}, {1, -1}});
    CHECK(cancel.letters.empty());
}

TEST_CASE("pure braid generators") {
    CHECK(pure_braid_generator(1, 2, 3) == BraidWord(3, {{1, 2}}));
    CHECK(pure_braid_generator(1, 3, 3) == BraidWord(3, {{1, 1}, {2, 2}, {1, -1}}));
    CHECK(tilde_pure_braid_generator(1, 2, 3) == BraidWord(3, {{1, -2}}));
    CHECK(tilde_pure_braid_generator(1, 3, 3) == BraidWord(3, {{1, -1}, {2, -2}, {1, 1}}));
    CHECK_THROWS_AS(pure_braid_generator(2, 2, 3), validation_error);

    // purity: trivial permutation for all pairs, n <= 6 (oracle: compose
    // transpositions inside permutation_of)
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                CHECK(is_pure(pure_braid_generator(i, j, n)));
                CHECK(is_pure(tilde_pure_braid_generator(i, j, n)));
            }
}

TEST_CASE("invert reverses and negates") {
    BraidWord w(3, {{1, 1}, {2, 1}});
    CHECK(invert(w) == BraidWord(3, {{2, -1}, {1, -1}}));
    CHECK(invert(invert(w)) == w);
    CHECK(invert(BraidWord(3, {})) == BraidWord(3, {}));

    MixedWord m(3, {{true, 1, 2}, {false, 3, -1}});
    CHECK(invert(invert(m)) == m);
}

TEST_CASE("permutation_of") {
    CHECK(permutation_of(BraidWord(2, {{1, 1}})) == std::vector<int>{2, 1});
    CHECK(permutation_of(BraidWord(2, {{1, 2}})) == std::vector<int>{1, 2});
    CHECK(is_pure(BraidWord(4, {{1, 2}, {3, -2}})));
    CHECK_FALSE(is_pure(BraidWord(4, {{1, 1}, {3, -2}})));
}

TEST_CASE("word text form round-trips") {
    MixedWord w(4, {{true, 1, 1}, {true, 2, -1}, {false, 3, 1}, {false, 1, -4}});
    CHECK(format_word(w) == "s1 s2^-1 x3 x1^-4");
    CHECK(parse_word(format_word(w), 4) == w);
    CHECK(parse_word("", 3).tokens.empty());
    CHECK_THROWS_AS(parse_word("q7", 3), parse_error);
    CHECK_THROWS_AS(parse_word("s9", 3), parse_error);
    CHECK_THROWS_AS(parse_word("s1^x", 3), parse_error);
}
