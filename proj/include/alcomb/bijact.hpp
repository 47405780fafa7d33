#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "alcomb/words.hpp"
#include "alcomb/xposet.hpp"

namespace alcomb {

// A word over Z/mZ cut into m ordered, possibly empty blocks by m-1 weakly
// increasing divider positions.  Blocks carry two coordinate systems:
//   position: 1..m, left to right;
//   label:    position p carries label (sigma + p) mod m, where sigma is the
//             letter sum of the word mod m.
// The insertion/read-off algorithms walk blocks by label; the balancing
// matrix and the equitable-partition machinery index them by position.
class PartitionedWord {
public:
    PartitionedWord(Word word, std::vector<int> dividers)
        : word_(std::move(word)), dividers_(std::move(dividers)) {
        const int m = word_.modulus();
        const int len = static_cast<int>(word_.size());
        detail::require(static_cast<int>(dividers_.size()) == m - 1,
                        "PartitionedWord: need m-1 dividers");
        int prev = 0;
        for (int d : dividers_) {
            detail::require(d >= prev && d <= len,
                            "PartitionedWord: dividers must be weakly increasing in [0, len]");
            prev = d;
        }
    }

    static PartitionedWord from_blocks(int m, const std::vector<std::vector<int>>& blocks) {
        detail::require(static_cast<int>(blocks.size()) == m,
                        "PartitionedWord: need exactly m blocks");
        std::vector<int> letters;
        std::vector<int> dividers;
        for (int p = 0; p < m; ++p) {
            letters.insert(letters.end(), blocks[p].begin(), blocks[p].end());
            if (p < m - 1) dividers.push_back(static_cast<int>(letters.size()));
        }
        return PartitionedWord(Word(m, std::move(letters)), std::move(dividers));
    }

    const Word& word() const { return word_; }
    int modulus() const { return word_.modulus(); }
    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& dividers() const { return dividers_; }
    int sigma() const { return word_.sum_mod(); }

    // Half-open letter range [begin, end) of the block at position p in 1..m.
    std::pair<int, int> block_range(int p) const {
        const int m = modulus();
        detail::require(p >= 1 && p <= m, "PartitionedWord: block position out of range");
        int lo = p == 1 ? 0 : dividers_[p - 2];
        int hi = p == m ? length() : dividers_[p - 1];
        return {lo, hi};
    }

    std::vector<int> block(int p) const {
        auto [lo, hi] = block_range(p);
        return std::vector<int>(word_.letters().begin() + lo, word_.letters().begin() + hi);
    }

    int block_size(int p) const {
        auto [lo, hi] = block_range(p);
        return hi - lo;
    }

    int label_of_position(int p) const { return detail::mod(sigma() + p, modulus()); }

    int position_of_label(int label) const {
        int p = detail::mod(label - sigma(), modulus());
        return p == 0 ? modulus() : p;
    }

    // Position (1-based) of the block containing letter index i in 1..len.
    int block_of_letter(int i) const {
        detail::require(i >= 1 && i <= length(), "PartitionedWord: letter index out of range");
        int p = 1;
        for (int d : dividers_) {
            if (i <= d) break;
            ++p;
        }
        return p;
    }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out;
        for (int p = 1; p <= modulus(); ++p) out.push_back(block(p));
        return out;
    }

    // Blocks joined by '|'; an empty block renders as the middle dot.
    std::string to_string() const {
        std::ostringstream out;
        for (int p = 1; p <= modulus(); ++p) {
            if (p > 1) out << '|';
            auto [lo, hi] = block_range(p);
            if (lo == hi) {
                out << "·";
            } else {
                for (int i = lo; i < hi; ++i) {
                    if (modulus() > 10 && i > lo) out << ',';
                    out << word_[i];
                }
            }
        }
        return out.str();
    }

    // Accepts the middle dot or an ASCII '.' for an empty block.
    static PartitionedWord parse(int m, std::string_view text) {
        std::vector<std::string> pieces{""};
        for (char ch : text) {
            if (ch == '|') pieces.emplace_back();
            else pieces.back().push_back(ch);
        }
        detail::require(static_cast<int>(pieces.size()) == m,
                        "PartitionedWord::parse: need exactly m blocks");
        std::vector<std::vector<int>> blocks;
        for (std::string& piece : pieces) {
            if (piece == "." || piece == "·") piece.clear();
            blocks.push_back(Word::parse(m, piece).letters());
        }
        return from_blocks(m, blocks);
    }

    friend auto operator<=>(const PartitionedWord&, const PartitionedWord&) = default;

private:
    Word word_;
    std::vector<int> dividers_;
};

// Insertion map p: scan x with x_0 = 0, writing t_i = x_i - x_{i-1} (mod m)
// as the rightmost letter of the block labeled x_{i-1}.  The output word
// sums to the last letter of x.
inline PartitionedWord p_map(const Word& x) {
    const int m = x.modulus();
    const int len = static_cast<int>(x.size());
    const int sigma = len == 0 ? 0 : x[len - 1];
    std::vector<std::vector<int>> blocks(m);
    auto position_of_label = [&](int label) {
        int p = detail::mod(label - sigma, m);
        return p == 0 ? m : p;
    };
    int prev = 0;
    for (int i = 0; i < len; ++i) {
        const int t = detail::mod(x[i] - prev, m);
        blocks[position_of_label(prev) - 1].push_back(t);
        prev = x[i];
    }
    return PartitionedWord::from_blocks(m, blocks);
}

struct QResult {
    Word trace;               // the successive block labels visited
    PartitionedWord leftover; // whatever the read-off failed to consume
};

struct QTraceRow {
    int step;          // 1-based loop iteration
    int label;         // current block label t at the top of the iteration
    std::string state; // remaining partitioned word before this step
    std::string trace; // letters emitted so far
};

namespace detail_bijact {

inline QResult q_run(const PartitionedWord& pw, std::vector<QTraceRow>* rows) {
    const int m = pw.modulus();
    std::vector<std::vector<int>> blocks = pw.blocks();
    std::vector<std::size_t> consumed(m, 0);
    std::vector<int> trace;
    auto render = [&] {
        std::ostringstream out;
        for (int p = 0; p < m; ++p) {
            if (p > 0) out << '|';
            if (consumed[p] == blocks[p].size()) out << "·";
            else
                for (std::size_t i = consumed[p]; i < blocks[p].size(); ++i) {
                    if (m > 10 && i > consumed[p]) out << ',';
                    out << blocks[p][i];
                }
        }
        return out.str();
    };
    auto trace_str = [&] {
        if (trace.empty()) return std::string("·");
        return Word(m, trace).to_string();
    };
    int t = 0;
    for (int step = 1;; ++step) {
        if (rows) rows->push_back({step, t, render(), trace_str()});
        const int p = pw.position_of_label(t) - 1;
        if (consumed[p] == blocks[p].size()) break;
        const int v = blocks[p][consumed[p]++];
        t = detail::mod(t + v, m);
        trace.push_back(t);
    }
    std::vector<std::vector<int>> rest(m);
    for (int p = 0; p < m; ++p)
        rest[p].assign(blocks[p].begin() + consumed[p], blocks[p].end());
    return {Word(m, std::move(trace)), PartitionedWord::from_blocks(m, rest)};
}

}  // namespace detail_bijact

// Read-off map q: starting at block label 0, repeatedly remove the leftmost
// letter v of the current block, step the label by v, and emit it.  Halts at
// the first empty current block.
inline QResult q_map(const PartitionedWord& pw) { return detail_bijact::q_run(pw, nullptr); }

// Same walk, recording one row per loop iteration (the final row shows the
// empty block that stops the walk).
inline std::vector<QTraceRow> q_map_trace(const PartitionedWord& pw) {
    std::vector<QTraceRow> rows;
    detail_bijact::q_run(pw, &rows);
    return rows;
}

// A partition is successful when the read-off consumes every letter; the
// final trace letter then equals sigma.
inline bool is_successful(const PartitionedWord& pw) {
    return q_map(pw).trace.size() == pw.word().size();
}

// Row i marks w_i cyclically consecutive columns starting at the position
// of row i's block; columns wrap modulo m into the range 1..m.
class BalancingMatrix {
public:
    BalancingMatrix(int rows, int cols) : cols_(cols), cells_(rows * cols, false) {}

    int rows() const { return cols_ == 0 ? 0 : static_cast<int>(cells_.size()) / cols_; }
    int cols() const { return cols_; }
    bool at(int row, int col) const { return cells_[(row - 1) * cols_ + (col - 1)]; }
    void set(int row, int col) { cells_[(row - 1) * cols_ + (col - 1)] = true; }

    std::vector<int> column_sums() const {
        std::vector<int> sums(cols_, 0);
        for (int r = 1; r <= rows(); ++r)
            for (int c = 1; c <= cols_; ++c) sums[c - 1] += at(r, c);
        return sums;
    }

private:
    int cols_;
    std::vector<bool> cells_;
};

inline BalancingMatrix balancing_matrix(const PartitionedWord& pw) {
    const int m = pw.modulus();
    BalancingMatrix mat(pw.length(), m);
    for (int i = 1; i <= pw.length(); ++i) {
        const int start = pw.block_of_letter(i);
        const int v = pw.word()[i - 1];
        for (int r = 0; r < v; ++r) mat.set(i, detail::mod(start - 1 + r, m) + 1);
    }
    return mat;
}

namespace detail_bijact {

// Column quotas of an equitably distributed matrix: with S the integer sum
// of the letters and sigma = S mod m, columns m-sigma .. m-1 hold one extra.
inline std::vector<int> equitable_quotas(const PartitionedWord& pw) {
    const int m = pw.modulus();
    long long total = 0;
    for (int v : pw.word().letters()) total += v;
    const long long base = total / m;
    const int sigma = static_cast<int>(total % m);
    std::vector<int> quota(m, static_cast<int>(base));
    for (int j = m - sigma; j <= m - 1; ++j) ++quota[j - 1];
    return quota;
}

}  // namespace detail_bijact

inline bool is_equitable(const PartitionedWord& pw) {
    return balancing_matrix(pw).column_sums() == detail_bijact::equitable_quotas(pw);
}

// Rightmost equitable partition: start with every letter in the leftmost
// block; while some column misses its quota, move the rightmost letter of
// the block at the first offending column into the next block.  Both
// failure modes (offending column m, empty offending block) are impossible
// and guarded as internal invariants.
inline PartitionedWord rightmost_equitable(const Word& w) {
    const int m = w.modulus();
    const int len = static_cast<int>(w.size());
    std::vector<int> dividers(static_cast<std::size_t>(m - 1), len);
    PartitionedWord pw(w, dividers);
    const std::vector<int> quota = detail_bijact::equitable_quotas(pw);
    long long guard = static_cast<long long>(len) * m + 1;
    while (true) {
        const std::vector<int> sums = balancing_matrix(pw).column_sums();
        int offending = 0;
        for (int j = 1; j <= m; ++j)
            if (sums[j - 1] != quota[j - 1]) {
                offending = j;
                break;
            }
        if (offending == 0) return pw;
        detail::ensure(offending < m, "rightmost_equitable: column m cannot be offending");
        detail::ensure(pw.block_size(offending) > 0,
                       "rightmost_equitable: offending block cannot be empty");
        detail::ensure(guard-- > 0, "rightmost_equitable: failed to converge");
        dividers = pw.dividers();
        --dividers[offending - 1];
        pw = PartitionedWord(w, dividers);
    }
}

// Successful partition via iterated correction: run the read-off; take the
// leftover; for each of the first m-1 positions, slide the unconsumed
// suffix of that block onto the front of the next block.  Starting from the
// rightmost equitable partition this terminates in the unique successful
// partition.  The trace variant returns every intermediate state, first the
// rightmost equitable partition and last the successful one.
inline std::vector<PartitionedWord> successful_partition_trace(const Word& w) {
    const int m = w.modulus();
    std::vector<PartitionedWord> states{rightmost_equitable(w)};
    long long guard = 1;  // bounded by the number of equitable partitions
    for (int i = 0; i < m; ++i) guard *= (w.size() + 1);
    while (true) {
        const PartitionedWord& cur = states.back();
        QResult res = q_map(cur);
        if (res.trace.size() == w.size()) return states;
        detail::ensure(guard-- > 0, "successful_partition: failed to converge");
        std::vector<std::vector<int>> blocks = cur.blocks();
        for (int p = 1; p <= m - 1; ++p) {
            const std::vector<int> moved = res.leftover.block(p);
            detail::ensure(blocks[p - 1].size() >= moved.size(),
                           "successful_partition: leftover exceeds its block");
            const std::size_t keep = blocks[p - 1].size() - moved.size();
            detail::ensure(std::equal(moved.begin(), moved.end(), blocks[p - 1].begin() + keep),
                           "successful_partition: leftover must be a block suffix");
            blocks[p - 1].resize(keep);
            blocks[p].insert(blocks[p].begin(), moved.begin(), moved.end());
        }
        states.push_back(PartitionedWord::from_blocks(m, blocks));
    }
}

inline PartitionedWord successful_partition(const Word& w) {
    return successful_partition_trace(w).back();
}

// Rank r of the tree of successful partitioned words: the root is the empty
// word (blocks labeled 1, 2, ..., 0) and child i of a node prepends the
// letter -i (mod m) to the block labeled i.
inline std::vector<PartitionedWord> tree_rank(int m, int r) {
    detail::require(m >= 1 && r >= 0, "tree_rank: need m >= 1, r >= 0");
    std::vector<PartitionedWord> rank{
        PartitionedWord(Word(m), std::vector<int>(static_cast<std::size_t>(m - 1), 0))};
    for (int depth = 0; depth < r; ++depth) {
        std::vector<PartitionedWord> next;
        next.reserve(rank.size() * m);
        for (const PartitionedWord& node : rank) {
            for (int i = 0; i < m; ++i) {
                std::vector<std::vector<int>> blocks = node.blocks();
                auto& target = blocks[node.position_of_label(i) - 1];
                target.insert(target.begin(), detail::mod(-i, m));
                next.push_back(PartitionedWord::from_blocks(m, blocks));
            }
        }
        rank = std::move(next);
    }
    return rank;
}

// Forward bijection X_m^k -> W_m^k: letter j is the first letter of the
// extended word of phi^j(x).  (For k >= 1 that is the first letter of
// phi^j(x) itself; reading the extended word also covers k = 0.)
inline Word w_map(const Word& x) {
    const int m = x.modulus();
    std::vector<int> out;
    out.reserve(x.size() + 1);
    Word cur = x;
    for (std::size_t j = 0; j <= x.size(); ++j) {
        out.push_back(extended_word(cur).letters[0]);
        cur = phi(cur);
    }
    return Word(m, std::move(out));
}

// Inverse bijection W_m^k -> X_m^k: rebuild the successful partition, read
// it off, and keep the first k letters of the trace.  The trace necessarily
// ends with m-1 for inputs in W.
inline Word w_inverse(const Word& u) {
    const int m = u.modulus();
    detail::require(!u.empty(), "w_inverse: need a word of length k+1 >= 1");
    detail::require(u.sum_mod() == detail::mod(m - 1, m),
                    "w_inverse: letters must sum to m-1 (mod m)");
    QResult res = q_map(successful_partition(u));
    detail::ensure(res.trace.size() == u.size(), "w_inverse: read-off must consume everything");
    detail::ensure(res.trace[u.size() - 1] == detail::mod(m - 1, m),
                   "w_inverse: trace must end with m-1");
    return res.trace.prefix(u.size() - 1);
}

}  // namespace alcomb
