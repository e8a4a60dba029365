#include "braidforge/words.hpp"

#include <algorithm>
#include <sstream>

namespace braidforge {

namespace {

void check_braid_letter(int n, const BraidLetter& l) {
    if (l.index < 1 || l.index > n - 1)
        throw validation_error("BraidWord: letter index out of range");
    if (l.exponent == 0) throw validation_error("BraidWord: zero exponent");
}

} // namespace

BraidWord::BraidWord(int n, std::vector<BraidLetter> ls) : strand_count(n), letters(std::move(ls)) {
    if (n < 2) throw validation_error("BraidWord: strand count must be >= 2");
    for (const auto& l : letters) check_braid_letter(n, l);
}

FreeWord::FreeWord(int n, const std::vector<FreeLetter>& ls) : rank(n) {
    if (n < 1) throw validation_error("FreeWord: rank must be >= 1");
    for (const auto& l : ls) {
        if (l.index < 1 || l.index > n) throw validation_error("FreeWord: letter index out of range");
        append(l.index, l.exponent);
    }
}

FreeWord& FreeWord::append(int index, long exponent) {
    if (exponent == 0) return *this;
    if (!letters.empty() && letters.back().index == index) {
        letters.back().exponent += exponent;
        if (letters.back().exponent == 0) letters.pop_back();
    } else {
        letters.push_back({index, exponent});
    }
    return *this;
}

MixedWord::MixedWord(int nn, std::vector<MixedToken> ts) : n(nn), tokens(std::move(ts)) {
    if (n < 2) throw validation_error("MixedWord: n must be >= 2");
    for (const auto& t : tokens) {
        const int hi = t.is_braid ? n - 1 : n;
        if (t.index < 1 || t.index > hi) throw validation_error("MixedWord: token index out of range");
        if (t.exponent == 0) throw validation_error("MixedWord: zero exponent");
    }
}

MixedWord MixedWord::from_braid(const BraidWord& w) {
    std::vector<MixedToken> ts;
    ts.reserve(w.letters.size());
    for (const auto& l : w.letters) ts.push_back({true, l.index, l.exponent});
    return MixedWord(w.strand_count, std::move(ts));
}

MixedWord MixedWord::from_free(int n, const FreeWord& w) {
    std::vector<MixedToken> ts;
    ts.reserve(w.letters.size());
    for (const auto& l : w.letters) ts.push_back({false, l.index, l.exponent});
    return MixedWord(n, std::move(ts));
}

namespace {

// phi^k(sigma_i)^{sign} applied to a single letter x_j^{+-1}.
// The inverse action sends x_i -> x_i^k x_{i+1} x_i^{-k}, x_{i+1} -> x_i.
void act_letter(FreeWord& out, long k, int i, int sign, int j, long e) {
    if (sign > 0) {
        if (j == i) {
            out.append(i + 1, e);
        } else if (j == i + 1) {
            out.append(i + 1, -k).append(i, e).append(i + 1, k);
        } else {
            out.append(j, e);
        }
    } else {
        if (j == i) {
            out.append(i, k).append(i + 1, e).append(i, -k);
        } else if (j == i + 1) {
            out.append(i, e);
        } else {
            out.append(j, e);
        }
    }
}

} // namespace

FreeWord wada_act(long k, int i, int sign, const FreeWord& w) {
    if (k == 0) throw validation_error("wada_act: exponent k must be nonzero");
    if (i < 1 || i > w.rank - 1) throw validation_error("wada_act: braid index out of range");
    FreeWord out;
    out.rank = w.rank;
    for (const auto& l : w.letters) {
        const long step = l.exponent > 0 ? 1 : -1;
        for (long c = 0; c != l.exponent; c += step) act_letter(out, k, i, sign, l.index, step);
    }
    return out;
}

FreeWord artin_act(int i, int sign, const FreeWord& w) { return wada_act(1, i, sign, w); }

FreeWord braid_act(long k, const BraidWord& braid, const FreeWord& w) {
    FreeWord out = w;
    for (auto it = braid.letters.rbegin(); it != braid.letters.rend(); ++it) {
        const int sign = it->exponent > 0 ? 1 : -1;
        const long reps = it->exponent > 0 ? it->exponent : -it->exponent;
        for (long c = 0; c < reps; ++c) out = wada_act(k, it->index, sign, out);
    }
    return out;
}

namespace {

BraidWord conjugated_square(int i, int j, int n, long gen_sign) {
    if (!(1 <= i && i < j && j <= n))
        throw validation_error("pure_braid_generator: need 1 <= i < j <= n");
    std::vector<BraidLetter> ls;
    for (int m = i; m <= j - 2; ++m) ls.push_back({m, gen_sign});
    ls.push_back({j - 1, 2 * gen_sign});
    for (int m = j - 2; m >= i; --m) ls.push_back({m, -gen_sign});
    return BraidWord(n, std::move(ls));
}

} // namespace

BraidWord pure_braid_generator(int i, int j, int n) { return conjugated_square(i, j, n, 1); }

BraidWord tilde_pure_braid_generator(int i, int j, int n) { return conjugated_square(i, j, n, -1); }

BraidWord invert(const BraidWord& w) {
    std::vector<BraidLetter> ls;
    ls.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        ls.push_back({it->index, -it->exponent});
    return BraidWord(w.strand_count, std::move(ls));
}

MixedWord invert(const MixedWord& w) {
    std::vector<MixedToken> ts;
    ts.reserve(w.tokens.size());
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it)
        ts.push_back({it->is_braid, it->index, -it->exponent});
    return MixedWord(w.n, std::move(ts));
}

std::vector<int> permutation_of(const BraidWord& w) {
    std::vector<int> perm(static_cast<size_t>(w.strand_count));
    for (int i = 0; i < w.strand_count; ++i) perm[static_cast<size_t>(i)] = i + 1;
    for (const auto& l : w.letters) {
        if (l.exponent % 2 == 0) continue;
        std::swap(perm[static_cast<size_t>(l.index - 1)], perm[static_cast<size_t>(l.index)]);
    }
    return perm;
}

bool is_pure(const BraidWord& w) {
    auto perm = permutation_of(w);
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i) + 1) return false;
    return true;
}

namespace {

void format_token(std::ostringstream& os, char kind, int index, long exponent, bool first) {
    if (!first) os << ' ';
    os << kind << index;
    if (exponent != 1) os << '^' << exponent;
}

} // namespace

std::string format_word(const BraidWord& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : w.letters) {
        format_token(os, 's', l.index, l.exponent, first);
        first = false;
    }
    return os.str();
}

std::string format_word(const MixedWord& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : w.tokens) {
        format_token(os, t.is_braid ? 's' : 'x', t.index, t.exponent, first);
        first = false;
    }
    return os.str();
}

MixedWord parse_word(const std::string& text, int n) {
    std::istringstream is(text);
    std::vector<MixedToken> ts;
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'x'))
            throw parse_error("parse_word: bad token '" + tok + "'");
        const bool is_braid = tok[0] == 's';
        const auto caret = tok.find('^');
        int index = 0;
        long exponent = 1;
        try {
            index = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
            if (caret != std::string::npos) exponent = std::stol(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw parse_error("parse_word: bad token '" + tok + "'");
        }
        ts.push_back({is_braid, index, exponent});
    }
    try {
        return MixedWord(n, std::move(ts));
    } catch (const validation_error& e) {
        throw parse_error(std::string("parse_word: ") + e.what());
    }
}

} // namespace braidforge
