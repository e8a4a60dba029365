#pragma once

#include <string>
#include <vector>

#include "braidforge/errors.hpp"

namespace braidforge {

// Words in the braid group B_n, the free group F_n, and their
// semidirect product. Letters carry arbitrary integer exponents;
// free words are kept freely reduced. No normal form beyond free
// reduction: equality of braid words is decided downstream by
// evaluating representations.

struct BraidLetter {
    int index;    // 1..n-1
    long exponent; // nonzero

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    int strand_count = 2;
    std::vector<BraidLetter> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<BraidLetter> ls);

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct FreeLetter {
    int index;    // 1..n
    long exponent; // nonzero

    friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

// Freely reduced on construction: adjacent letters with equal index are
// merged, zero exponents dropped.
struct FreeWord {
    int rank = 1;
    std::vector<FreeLetter> letters;

    FreeWord() = default;
    FreeWord(int n, const std::vector<FreeLetter>& ls);

    FreeWord& append(int index, long exponent); // reducing push

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

struct MixedToken {
    bool is_braid;
    int index;
    long exponent;

    friend bool operator==(const MixedToken&, const MixedToken&) = default;
};

struct MixedWord {
    int n = 2;
    std::vector<MixedToken> tokens;

    MixedWord() = default;
    MixedWord(int n, std::vector<MixedToken> ts);
    static MixedWord from_braid(const BraidWord& w);
    static MixedWord from_free(int n, const FreeWord& w);

    friend bool operator==(const MixedWord&, const MixedWord&) = default;
};

// Image of w under the Artin automorphism theta_{sigma_i}^{sign}:
//   x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1},  x_j -> x_j otherwise.
FreeWord artin_act(int i, int sign, const FreeWord& w);

// Wada exponent-k action phi^k(sigma_i)^{sign}: the conjugator x_{i+1}
// is replaced by x_{i+1}^k. k = 1 coincides with artin_act. k must be nonzero.
FreeWord wada_act(long k, int i, int sign, const FreeWord& w);

// Image of w under the whole braid word (theta is a left action, so the
// rightmost letter acts first).
FreeWord braid_act(long k, const BraidWord& braid, const FreeWord& w);

// sigma_{ij} = sigma_i ... sigma_{j-2} (sigma_{j-1})^2 (sigma_i ... sigma_{j-2})^{-1}
BraidWord pure_braid_generator(int i, int j, int n);

// Same shape built from tilde generators sigma_m^{-1}.
BraidWord tilde_pure_braid_generator(int i, int j, int n);

BraidWord invert(const BraidWord& w);
MixedWord invert(const MixedWord& w);

// Image under B_n -> S_n, sigma_i -> (i, i+1). Returns perm with
// perm[i] = image of strand i+1, values 1-based. Identity permutation
// certifies purity.
std::vector<int> permutation_of(const BraidWord& w);
bool is_pure(const BraidWord& w);

// Text form, whitespace-separated tokens "s1 s2^-1 x3" (s = braid letter,
// x = free letter).
std::string format_word(const BraidWord& w);
std::string format_word(const MixedWord& w);
MixedWord parse_word(const std::string& text, int n);

} // namespace braidforge
