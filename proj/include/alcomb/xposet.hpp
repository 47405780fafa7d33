#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "alcomb/words.hpp"

namespace alcomb {

// The extended word of a length-k base word x over Z/mZ:
//   (x)(m-1)(x-1)(m-2)...(x-m+1)(0)
// of length (k+1)m.  Each of the k+1 position classes mod (k+1) runs through
// all m residues, so the extended word contains exactly k+1 zeros.
struct ExtendedWord {
    Word base;
    Word letters;
};

inline ExtendedWord extended_word(const Word& x) {
    const int m = x.modulus();
    std::vector<int> ext;
    ext.reserve((x.size() + 1) * m);
    for (int j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < x.size(); ++i) ext.push_back(detail::mod(x[i] - j, m));
        ext.push_back(detail::mod(m - 1 - j, m));
    }
    ExtendedWord ew{x, Word(m, std::move(ext))};
    int zeros = 0;
    for (int v : ew.letters.letters()) zeros += (v == 0);
    detail::ensure(zeros == static_cast<int>(x.size()) + 1,
                   "extended_word: zero count must be k+1");
    return ew;
}

// The cyclic action: rotate the extended word left until its leftmost zero
// is the final character, then keep the first k letters.  phi has order
// dividing k+1 because the extended word holds exactly k+1 zeros.
inline Word phi(const Word& x) {
    const Word ext = extended_word(x).letters;
    const std::size_t len = ext.size();
    std::size_t z = 0;
    while (ext[z] != 0) ++z;
    std::vector<int> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(ext[(z + 1 + i) % len]);
    return Word(x.modulus(), std::move(out));
}

// Covering relations of the poset X_m^k on length-k words:
//   wrap:  ya < (a+1)y            for a < m-1  (a the last letter)
//   swap:  u a b v < u b a v      for b < a    (adjacent descending pair)
inline std::set<Word> upper_covers(const Word& x) {
    const int m = x.modulus();
    const std::size_t k = x.size();
    std::set<Word> covers;
    if (k == 0) return covers;
    if (x[k - 1] < m - 1) {
        std::vector<int> up;
        up.reserve(k);
        up.push_back(x[k - 1] + 1);
        for (std::size_t i = 0; i + 1 < k; ++i) up.push_back(x[i]);
        covers.emplace(m, std::move(up));
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (x[i + 1] < x[i]) {
            std::vector<int> up = x.letters();
            std::swap(up[i], up[i + 1]);
            covers.emplace(m, std::move(up));
        }
    }
    return covers;
}

// All covering pairs (lower, upper) over the m^k words, sorted.
inline std::vector<std::pair<Word, Word>> x_hasse(int m, int k) {
    std::vector<std::pair<Word, Word>> edges;
    for (const Word& x : enumerate_words(m, k))
        for (const Word& y : upper_covers(x)) edges.emplace_back(x, y);
    return edges;
}

enum class CoverType { wrap, swap };

// An edge's type is intrinsic: a swap preserves the letter multiset, a wrap
// replaces an a by an a+1.
inline CoverType cover_type(const Word& lower, const Word& upper) {
    std::vector<int> a = lower.letters(), b = upper.letters();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b ? CoverType::swap : CoverType::wrap;
}

// Classification of a cover against the leftmost zero of the lower word's
// extended word, with the predicted phi-images of both endpoints.  A wrap
// edge pivots when the zero comes from the last letter; a swap edge pivots
// when it comes from the smaller letter of the descending pair.  Pivoting
// edges map to wrap edges, the rest map to swap edges.
struct CoverClass {
    CoverType type;
    bool pivot_zero = false;
    CoverType image_type;
    bool image_reversed = false;             // phi(lower) covers phi(upper)
    std::optional<Word> image_of_lower;      // closed-form predictions
    std::optional<Word> image_of_upper;      // (absent for non-pivot swaps)
};

inline CoverClass classify_cover(const Word& lower, const Word& upper) {
    const int m = lower.modulus();
    const int k = static_cast<int>(lower.size());
    detail::require(upper_covers(lower).count(upper) == 1,
                    "classify_cover: not a covering pair");
    const Word ext = extended_word(lower).letters;
    int zpos = 1;  // 1-based position of the leftmost zero
    while (ext[zpos - 1] != 0) ++zpos;
    const int zcol = (zpos - 1) % (k + 1) + 1;  // position class, in [1, k+1]
    const int zshift = (zpos - 1) / (k + 1);    // which shifted copy

    auto word_of = [&](std::initializer_list<std::vector<int>> parts) {
        std::vector<int> v;
        for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
        return Word(m, std::move(v));
    };
    auto slice = [&](const Word& w, int from, int to, int delta) {  // 1-based, inclusive
        std::vector<int> v;
        for (int i = from; i <= to; ++i) v.push_back(w[i - 1] - delta);
        return v;
    };

    CoverClass cc{cover_type(lower, upper), false, CoverType::swap, false, {}, {}};
    detail::ensure(zcol <= k, "classify_cover: leftmost zero cannot be the final sentinel");
    if (cc.type == CoverType::wrap) {
        const int a = lower[k - 1];
        const int j = zshift;
        if (zcol == k) {
            // Zero comes from the last letter: the wrapped letter is the
            // pivot and the image edge wraps again, orientation reversed.
            cc.pivot_zero = true;
            cc.image_type = CoverType::wrap;
            cc.image_reversed = true;
            cc.image_of_lower = word_of({{m - 1 - j}, slice(lower, 1, k - 1, j + 1)});
            cc.image_of_upper = word_of({slice(lower, 1, k - 1, j + 1), {m - 2 - j}});
        } else {
            cc.image_type = CoverType::swap;
            cc.image_reversed = true;
            cc.image_of_lower = word_of({slice(lower, zcol + 1, k - 1, j),
                                         {a - j},
                                         {m - 1 - j},
                                         slice(lower, 1, zcol - 1, j + 1)});
            cc.image_of_upper = word_of({slice(lower, zcol + 1, k - 1, j),
                                         {m - 1 - j},
                                         {a - j},
                                         slice(lower, 1, zcol - 1, j + 1)});
        }
    } else {
        int i = 0;  // 1-based position of the descending pair
        for (int p = 1; p < k; ++p)
            if (lower[p - 1] != upper[p - 1]) {
                i = p;
                break;
            }
        const int a = lower[i - 1], b = lower[i];
        const long long pa = static_cast<long long>(a) * (k + 1) + i;
        const long long pb = static_cast<long long>(b) * (k + 1) + i + 1;
        if (zpos == pa || zpos == pb) {
            cc.pivot_zero = true;
            cc.image_type = CoverType::wrap;
            // The smaller letter's slot precedes the larger letter's slot,
            // so the leftmost zero of the pair zone is always at b's slot.
            detail::ensure(zpos == pb, "classify_cover: pivot zero must sit at the b slot");
            cc.image_reversed = false;
            cc.image_of_lower = word_of({slice(lower, i + 2, k, b),
                                         {m - 1 - b},
                                         slice(lower, 1, i - 1, b + 1),
                                         {a - b - 1}});
            cc.image_of_upper = word_of({{a - b},
                                         slice(lower, i + 2, k, b),
                                         {m - 1 - b},
                                         slice(lower, 1, i - 1, b + 1)});
        } else {
            // Rotation amount is shared by both endpoints: the swap is
            // transported verbatim, orientation preserved.
            cc.image_type = CoverType::swap;
            cc.image_reversed = false;
        }
    }
    return cc;
}

struct PhiSymmetryReport {
    bool symmetric = false;
    std::size_t total_edges = 0;
    std::size_t reversed_edges = 0;
};

inline PhiSymmetryReport phi_symmetry_report(int m, int k) {
    PhiSymmetryReport rep;
    std::set<std::pair<Word, Word>> edges;
    for (auto& e : x_hasse(m, k)) edges.insert(e);
    rep.total_edges = edges.size();
    rep.symmetric = true;
    for (const auto& [lo, hi] : edges) {
        const Word a = phi(lo), b = phi(hi);
        if (edges.count({a, b})) continue;
        if (edges.count({b, a})) {
            ++rep.reversed_edges;
            continue;
        }
        rep.symmetric = false;
    }
    return rep;
}

// True iff phi maps every Hasse edge to a Hasse edge as an unordered pair.
inline bool check_phi_graph_automorphism(int m, int k) {
    return phi_symmetry_report(m, k).symmetric;
}

// Orbits of the m^k words under phi, keyed by lexicographically smallest
// member and sorted by that key.
inline std::vector<std::vector<Word>> phi_orbits(int m, int k) {
    std::vector<std::vector<Word>> orbits;
    std::set<Word> seen;
    for (const Word& x : enumerate_words(m, k)) {
        if (seen.count(x)) continue;
        std::vector<Word> orbit;
        Word cur = x;
        do {
            orbit.push_back(cur);
            seen.insert(cur);
            cur = phi(cur);
        } while (cur != x);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

inline std::string edges_to_dot(const std::vector<std::pair<Word, Word>>& edges,
                                const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (const auto& [lo, hi] : edges)
        out << "  \"" << lo.to_string() << "\" -> \"" << hi.to_string() << "\";\n";
    out << "}\n";
    return out.str();
}

inline std::string edges_to_json(const std::vector<std::pair<Word, Word>>& edges) {
    std::ostringstream out;
    out << "{\"edges\":[";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0) out << ",";
        out << "[\"" << edges[i].first.to_string() << "\",\"" << edges[i].second.to_string()
            << "\"]";
    }
    out << "]}";
    return out.str();
}

}  // namespace alcomb
