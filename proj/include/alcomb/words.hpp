#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "alcomb/detail.hpp"

namespace alcomb {

// A fixed-length word of residues mod m.  Letters are always stored in the
// canonical range [0, m); the constructor reduces whatever it is given, so
// letter arithmetic never carries sign ambiguity.
class Word {
public:
    Word(int modulus, std::vector<int> letters) : modulus_(modulus) {
        detail::require(modulus >= 1, "Word: modulus must be >= 1");
        letters_.reserve(letters.size());
        for (int v : letters) letters_.push_back(detail::mod(v, modulus));
    }

    explicit Word(int modulus) : Word(modulus, {}) {}

    int modulus() const { return modulus_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<int>& letters() const { return letters_; }

    // Letter sum reduced mod m.
    int sum_mod() const {
        long long s = std::accumulate(letters_.begin(), letters_.end(), 0LL);
        return detail::mod(s, modulus_);
    }

    Word with_appended(int letter) const {
        std::vector<int> ls = letters_;
        ls.push_back(letter);
        return Word(modulus_, std::move(ls));
    }

    Word prefix(std::size_t n) const {
        detail::require(n <= letters_.size(), "Word::prefix: length out of range");
        return Word(modulus_, std::vector<int>(letters_.begin(), letters_.begin() + n));
    }

    // Digits when m <= 10, comma-separated integers otherwise.
    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (modulus_ > 10 && i > 0) out << ',';
            out << letters_[i];
        }
        return out.str();
    }

    static Word parse(int modulus, std::string_view text) {
        std::vector<int> ls;
        if (modulus <= 10) {
            for (char ch : text) {
                detail::require(ch >= '0' && ch <= '9', "Word::parse: expected digit");
                ls.push_back(ch - '0');
            }
        } else {
            std::string buf;
            auto flush = [&] {
                if (!buf.empty()) {
                    ls.push_back(std::stoi(buf));
                    buf.clear();
                }
            };
            for (char ch : text) {
                if (ch == ',') flush();
                else buf.push_back(ch);
            }
            flush();
        }
        for (int v : ls)
            detail::require(v >= 0 && v < modulus, "Word::parse: letter out of range");
        return Word(modulus, std::move(ls));
    }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    int modulus_;
    std::vector<int> letters_;
};

inline Word rotate_left(const Word& w) {
    if (w.size() <= 1) return w;
    std::vector<int> ls(w.letters().begin() + 1, w.letters().end());
    ls.push_back(w[0]);
    return Word(w.modulus(), std::move(ls));
}

// (w - i): subtract i from each letter, mod m.
inline Word shift(const Word& w, int i) {
    std::vector<int> ls = w.letters();
    for (int& v : ls) v = detail::mod(static_cast<long long>(v) - i, w.modulus());
    return Word(w.modulus(), std::move(ls));
}

// All m^len words of the given length over Z/mZ, in lexicographic order.
inline std::vector<Word> enumerate_words(int m, int len) {
    detail::require(m >= 1 && len >= 0, "enumerate_words: need m >= 1, len >= 0");
    std::vector<Word> out;
    std::vector<int> cur(len, 0);
    while (true) {
        out.emplace_back(m, cur);
        int pos = len - 1;
        while (pos >= 0 && cur[pos] == m - 1) cur[pos--] = 0;
        if (pos < 0) break;
        ++cur[pos];
    }
    return out;
}

// The set W_m^k: words of length (k+1) over Z/mZ whose letters sum to
// m-1 (mod m), in lexicographic order.  |W_m^k| = m^k.
inline std::vector<Word> enumerate_w_words(int m, int k) {
    detail::require(m >= 1 && k >= 0, "enumerate_w_words: need m >= 1, k >= 0");
    std::vector<Word> out;
    for (const Word& w : enumerate_words(m, k + 1))
        if (w.sum_mod() == detail::mod(m - 1, m)) out.push_back(w);
    return out;
}

// Orbits of W_m^k under left rotation.  Each orbit starts at its
// lexicographically smallest member; orbits are sorted by that key.
inline std::vector<std::vector<Word>> rotation_orbits(int m, int k) {
    std::vector<Word> all = enumerate_w_words(m, k);
    std::vector<std::vector<Word>> orbits;
    std::vector<Word> seen;
    for (const Word& w : all) {
        if (std::binary_search(seen.begin(), seen.end(), w)) continue;
        std::vector<Word> orbit;
        Word cur = w;
        do {
            orbit.push_back(cur);
            cur = rotate_left(cur);
        } while (cur != w);
        for (const Word& u : orbit) seen.insert(std::lower_bound(seen.begin(), seen.end(), u), u);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace alcomb
