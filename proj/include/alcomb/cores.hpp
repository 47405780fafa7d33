#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alcomb/words.hpp"
#include "alcomb/xposet.hpp"

namespace alcomb {

// Integer partition: weakly decreasing, strictly positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            detail::require(parts_[i] > 0, "Partition: parts must be positive");
            detail::require(i == 0 || parts_[i - 1] >= parts_[i],
                            "Partition: parts must be weakly decreasing");
        }
    }

    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    const std::vector<long long>& parts() const { return parts_; }

    long long boxes() const {
        long long s = 0;
        for (long long p : parts_) s += p;
        return s;
    }

    // Cellwise containment of Ferrers diagrams.
    bool contained_in(const Partition& outer) const {
        if (rows() > outer.rows()) return false;
        for (std::size_t i = 0; i < rows(); ++i)
            if (parts_[i] > outer.parts_[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::ostringstream out;
        out << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) out << ',';
            out << parts_[i];
        }
        out << ']';
        return out.str();
    }

    static Partition parse(std::string_view text) {
        detail::require(text.size() >= 2 && text.front() == '[' && text.back() == ']',
                        "Partition::parse: expected [a,b,...]");
        std::vector<long long> parts;
        std::string buf;
        for (char ch : text.substr(1, text.size() - 2)) {
            if (ch == ',') {
                parts.push_back(std::stoll(buf));
                buf.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                buf.push_back(ch);
            }
        }
        if (!buf.empty()) parts.push_back(std::stoll(buf));
        return Partition(std::move(parts));
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<long long> parts_;
};

// Hook length of cell (r, c), 1-based: arm + leg + 1.
inline long long hook_length(const Partition& p, std::size_t r, std::size_t c) {
    long long arm = p.part(r - 1) - static_cast<long long>(c);
    long long leg = 0;
    for (std::size_t i = r; i < p.rows(); ++i) leg += (p.part(i) >= static_cast<long long>(c));
    return arm + leg + 1;
}

// True iff no cell has hook length exactly n.
inline bool is_core(const Partition& p, int n) {
    detail::require(n >= 1, "is_core: need n >= 1");
    for (std::size_t r = 1; r <= p.rows(); ++r)
        for (long long c = 1; c <= p.part(r - 1); ++c)
            if (hook_length(p, r, static_cast<std::size_t>(c)) == n) return false;
    return true;
}

namespace detail_cores {

// Addable corner cells (r, c) of p, 1-based.
inline std::vector<std::pair<long long, long long>> addable_corners(const Partition& p) {
    std::vector<std::pair<long long, long long>> cells;
    for (std::size_t r = 1; r <= p.rows() + 1; ++r) {
        long long c = p.part(r - 1) + 1;
        if (r == 1 || p.part(r - 2) >= c) cells.emplace_back(r, c);
    }
    return cells;
}

inline std::vector<std::pair<long long, long long>> removable_corners(const Partition& p) {
    std::vector<std::pair<long long, long long>> cells;
    for (std::size_t r = 1; r <= p.rows(); ++r)
        if (p.part(r - 1) > p.part(r)) cells.emplace_back(r, p.part(r - 1));
    return cells;
}

inline int content_mod(long long r, long long c, int n) { return detail::mod(c - r, n); }

}  // namespace detail_cores

// The affine action on n-cores: s_i adds every addable corner of content i
// if any exist, else removes every removable corner of content i, else acts
// as the identity.  An n-core never offers both at once.
inline Partition apply_s(const Partition& p, int i, int n) {
    detail::require(n >= 2, "apply_s: need n >= 2");
    detail::require(is_core(p, n), "apply_s: input must be an n-core");
    detail::require(i >= 0 && i < n, "apply_s: residue out of range");
    std::vector<std::pair<long long, long long>> add, rem;
    for (auto [r, c] : detail_cores::addable_corners(p))
        if (detail_cores::content_mod(r, c, n) == i) add.emplace_back(r, c);
    for (auto [r, c] : detail_cores::removable_corners(p))
        if (detail_cores::content_mod(r, c, n) == i) rem.emplace_back(r, c);
    detail::ensure(add.empty() || rem.empty(),
                   "apply_s: a core cannot have addable and removable corners of one content");
    std::vector<long long> parts = p.parts();
    if (!add.empty()) {
        for (auto [r, c] : add) {
            if (static_cast<std::size_t>(r) > parts.size()) parts.push_back(0);
            parts[r - 1] = c;
        }
    } else if (!rem.empty()) {
        for (auto [r, c] : rem) parts[r - 1] = c - 1;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }
    Partition result{std::move(parts)};
    detail::ensure(is_core(result, n), "apply_s: result must stay an n-core");
    return result;
}

// Boundary word of the profile, read from top right to bottom left: 0 is a
// down step, 1 a left step.  The word starts with the down step at the right
// end of row 1 and is padded with trailing zeros to (m-1)(k+1) letters, so
// the first zero lands in the leftmost abacus column.
inline std::string boundary_word(const Partition& p, int m, int k) {
    detail::require(is_core(p, k + 1), "boundary_word: input must be a (k+1)-core");
    std::string bw;
    for (std::size_t r = 1; r <= p.rows(); ++r) {
        bw.push_back('0');
        bw.append(static_cast<std::size_t>(p.part(r - 1) - p.part(r)), '1');
    }
    const std::size_t budget = static_cast<std::size_t>(m - 1) * (k + 1);
    detail::require(bw.size() <= budget, "boundary_word: profile exceeds (m-1)(k+1) steps");
    bw.append(budget - bw.size(), '0');
    return bw;
}

// Abacus display: the boundary word cut into runs of length k+1, stacked.
inline std::vector<std::string> abacus(const std::string& bw, int k) {
    detail::require(bw.size() % (k + 1) == 0, "abacus: length must be divisible by k+1");
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < bw.size(); i += k + 1) rows.push_back(bw.substr(i, k + 1));
    return rows;
}

// Rectangle R_{k,i} = (i^(k-i+1)) stacking: each index shifts the current
// shape right by i and appends the rectangle's rows below.
inline Partition rectangle_stack(int k, const std::vector<int>& indices) {
    detail::require(k >= 1, "rectangle_stack: need k >= 1");
    std::vector<long long> parts;
    int prev = k;
    for (int idx : indices) {
        detail::require(idx >= 0 && idx <= k, "rectangle_stack: index out of [0, k]");
        detail::require(idx <= prev, "rectangle_stack: indices must be weakly decreasing");
        prev = idx;
        if (idx == 0) continue;
        for (long long& part : parts) part += idx;
        parts.insert(parts.end(), static_cast<std::size_t>(k - idx + 1), idx);
    }
    return Partition(std::move(parts));
}

// Membership in Y_m^k: a (k+1)-core contained in some rectangle stack
// R_{k,I} with I weakly decreasing of length m-1.  Containment is decided
// by exhaustive search over index tuples; at most (k+1)^(m-1) candidates at
// desk scale.
inline bool in_Y(const Partition& p, int m, int k) {
    if (!is_core(p, k + 1)) return false;
    if (m == 1 || k == 0) return p.empty();
    std::vector<int> idx(static_cast<std::size_t>(m - 1), 0);
    auto search = [&](auto&& self, std::size_t pos, int maxval) -> bool {
        if (pos == idx.size()) return p.contained_in(rectangle_stack(k, idx));
        for (int v = maxval; v >= 0; --v) {
            idx[pos] = v;
            if (self(self, pos + 1, v)) return true;
        }
        return false;
    };
    if (m == 1) return p.empty();
    return search(search, 0, k);
}

// The poset isomorphism Y_m^k -> X_m^k: letter i of the word counts the
// ones in abacus column i+1 (column 1 is all zeros by the alignment).
inline Word core_to_word(const Partition& p, int m, int k) {
    detail::require(in_Y(p, m, k), "core_to_word: core lies outside Y");
    const std::vector<std::string> rows = abacus(boundary_word(p, m, k), k);
    std::vector<int> letters;
    for (int col = 1; col <= k; ++col) {
        int ones = 0;
        bool seen_zero = false;
        for (const std::string& row : rows) {
            if (row[col] == '1') {
                detail::ensure(!seen_zero, "core_to_word: abacus column must be flush");
                ++ones;
            } else {
                seen_zero = true;
            }
        }
        detail::ensure(ones <= m - 1, "core_to_word: column count exceeds m-1");
        letters.push_back(ones);
    }
    for (const std::string& row : rows)
        detail::ensure(row[0] == '0', "core_to_word: column 1 must be all zeros");
    return Word(m, std::move(letters));
}

// Inverse direction: rebuild the flush abacus from the word, flatten it to a
// boundary word, and read the partition off the profile.
inline Partition word_to_core(const Word& x, int m, int k) {
    detail::require(x.modulus() == m && static_cast<int>(x.size()) == k,
                    "word_to_core: word must have length k over Z/mZ");
    std::string bw;
    for (int row = 0; row < m - 1; ++row)
        for (int col = 0; col <= k; ++col)
            bw.push_back(col >= 1 && x[col - 1] > row ? '1' : '0');
    // Row lengths: each 0 is a row of the partition, its length the number
    // of ones appearing later in the boundary word.
    std::vector<long long> parts;
    long long ones_after = std::count(bw.begin(), bw.end(), '1');
    for (char step : bw) {
        if (step == '0') {
            if (ones_after > 0) parts.push_back(ones_after);
        } else {
            --ones_after;
        }
    }
    Partition result{std::move(parts)};
    detail::ensure(is_core(result, k + 1), "word_to_core: result must be a (k+1)-core");
    return result;
}

// All of Y_m^k, generated upward from the empty core; Y is an order ideal,
// so every element is reachable through Y.  Sorted by (size, parts).
inline std::vector<Partition> enumerate_y(int m, int k) {
    if (k == 0) return {Partition{}};
    std::set<Partition> seen;
    std::vector<Partition> frontier{Partition{}};
    seen.insert(Partition{});
    while (!frontier.empty()) {
        std::vector<Partition> next;
        for (const Partition& p : frontier) {
            for (int i = 0; i <= k; ++i) {
                Partition q = apply_s(p, i, k + 1);
                if (q.boxes() > p.boxes() && !seen.count(q) && in_Y(q, m, k)) {
                    seen.insert(q);
                    next.push_back(q);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Partition> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return std::make_pair(a.boxes(), a.parts()) < std::make_pair(b.boxes(), b.parts());
    });
    return out;
}

// Covering pairs (mu, lambda) of Y_m^k: lambda = s_i(mu) with more boxes.
inline std::vector<std::pair<Partition, Partition>> y_hasse(int m, int k) {
    std::vector<std::pair<Partition, Partition>> edges;
    if (k == 0) return edges;
    for (const Partition& p : enumerate_y(m, k)) {
        for (int i = 0; i <= k; ++i) {
            Partition q = apply_s(p, i, k + 1);
            if (q.boxes() > p.boxes() && in_Y(q, m, k)) edges.emplace_back(p, q);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// The cyclic action transported from words; no direct rule on cores is known.
inline Partition core_phi(const Partition& p, int m, int k) {
    return word_to_core(phi(core_to_word(p, m, k)), m, k);
}

}  // namespace alcomb
