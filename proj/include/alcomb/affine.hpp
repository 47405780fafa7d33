#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "alcomb/cores.hpp"
#include "alcomb/words.hpp"

namespace alcomb {

// Element of the affine symmetric group in window notation: the bijection
// f of Z with f(i+n) = f(i)+n, recorded by [f(1), ..., f(n)].  Windows have
// distinct residues mod n and displacement sum zero.
class AffinePermutation {
public:
    AffinePermutation(int n, std::vector<long long> window)
        : n_(n), window_(std::move(window)) {
        detail::require(n >= 1, "AffinePermutation: need n >= 1");
        detail::require(static_cast<int>(window_.size()) == n,
                        "AffinePermutation: window must have n entries");
        std::vector<bool> seen(n, false);
        long long disp = 0;
        for (int i = 1; i <= n; ++i) {
            const int res = detail::mod(window_[i - 1], n);
            detail::require(!seen[res], "AffinePermutation: window entries must be distinct mod n");
            seen[res] = true;
            disp += window_[i - 1] - i;
        }
        detail::require(disp == 0, "AffinePermutation: displacements must sum to zero");
    }

    static AffinePermutation identity(int n) {
        std::vector<long long> w(n);
        std::iota(w.begin(), w.end(), 1);
        return AffinePermutation(n, std::move(w));
    }

    // Coxeter generators: s_i swaps i, i+1 for 1 <= i <= n-1; s_0 is the
    // affine reflection with window [0, 2, 3, ..., n-1, n+1].
    static AffinePermutation generator(int n, int i) {
        detail::require(i >= 0 && i <= n - 1, "AffinePermutation: generator index out of range");
        std::vector<long long> w(n);
        std::iota(w.begin(), w.end(), 1);
        if (i == 0) {
            w[0] = 0;
            w[n - 1] = n + 1;
        } else {
            std::swap(w[i - 1], w[i]);
        }
        return AffinePermutation(n, std::move(w));
    }

    int n() const { return n_; }
    const std::vector<long long>& window() const { return window_; }

    // Periodic extension to all of Z.
    long long apply(long long i) const {
        const long long r = detail::floor_div(i - 1, n_);
        return window_[i - 1 - r * n_] + r * n_;
    }

    // (this o other)(i) = this(other(i)).
    AffinePermutation compose(const AffinePermutation& other) const {
        detail::require(n_ == other.n_, "AffinePermutation: rank mismatch");
        std::vector<long long> w(n_);
        for (int i = 1; i <= n_; ++i) w[i - 1] = apply(other.window_[i - 1]);
        return AffinePermutation(n_, std::move(w));
    }

    AffinePermutation inverse() const {
        std::vector<long long> w(n_);
        for (int i = 1; i <= n_; ++i) {
            const long long v = window_[i - 1];
            const long long r = detail::floor_div(v - 1, n_);
            w[v - 1 - r * n_] = i - r * n_;
        }
        return AffinePermutation(n_, std::move(w));
    }

    std::string to_string() const {
        std::ostringstream out;
        out << '[';
        for (int i = 0; i < n_; ++i) {
            if (i > 0) out << ',';
            out << window_[i];
        }
        out << ']';
        return out.str();
    }

    friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

private:
    int n_;
    std::vector<long long> window_;
};

using Rational = boost::rational<long long>;
using RationalPoint = std::vector<Rational>;

inline long long rational_floor(const Rational& r) {
    return detail::floor_div(r.numerator(), r.denominator());
}

// Left action on points: with window(i) = base + n*shift (base in [1, n]),
// coordinate i lands at slot base displaced by shift.  Generator i swaps
// coordinates i, i+1 and generator 0 maps x to (x_n + 1, x_2, ..., x_1 - 1).
inline RationalPoint act(const AffinePermutation& perm, const RationalPoint& pt) {
    const int n = perm.n();
    detail::require(static_cast<int>(pt.size()) == n, "act: rank mismatch");
    RationalPoint out(n);
    for (int i = 1; i <= n; ++i) {
        const long long v = perm.window()[i - 1];
        const long long r = detail::floor_div(v - 1, n);
        out[v - 1 - r * n] = pt[i - 1] + Rational(r);
    }
    return out;
}

// Interior point of the fundamental alcove, p0_i = (n-i)/n, transported by
// the permutation.  Coordinate differences of the result are never integers.
inline RationalPoint alcove_sample(const AffinePermutation& perm) {
    const int n = perm.n();
    RationalPoint p0(n);
    for (int i = 1; i <= n; ++i) p0[i - 1] = Rational(n - i, n);
    return act(perm, p0);
}

// Alcove fingerprint: floor(x_i - x_j) over pairs i < j.  Two generic points
// share a fingerprint exactly when they lie in the same alcove.
inline std::vector<long long> alcove_key(const RationalPoint& pt) {
    std::vector<long long> key;
    for (std::size_t i = 0; i < pt.size(); ++i)
        for (std::size_t j = i + 1; j < pt.size(); ++j)
            key.push_back(rational_floor(pt[i] - pt[j]));
    return key;
}

// One alcove of the d-fold dilation of the fundamental alcove, carrying the
// core and word labels of the simultaneous BFS.
struct DilationState {
    AffinePermutation perm;
    Partition core;
    Word word;
};

// BFS from (identity, empty core), right-multiplying by generators while
// applying the matching content action to the core.  A state is kept while
// its sample point stays strictly dominant with x_1 - x_n < d.  Exactly
// d^(n-1) alcoves survive; each carries core_to_word over m = d, k = n-1.
inline std::vector<DilationState> enumerate_dilation(int n, int d) {
    detail::require(n >= 2, "enumerate_dilation: need n >= 2");
    detail::require(d >= 1, "enumerate_dilation: need d >= 1");
    auto dominant_in_dilation = [&](const RationalPoint& pt) {
        for (int i = 0; i + 1 < n; ++i)
            if (pt[i] <= pt[i + 1]) return false;
        return pt[0] - pt[n - 1] < Rational(d);
    };

    std::map<std::vector<long long>, Partition> visited;
    std::deque<std::pair<AffinePermutation, Partition>> queue;
    queue.emplace_back(AffinePermutation::identity(n), Partition{});
    visited.emplace(queue.front().first.window(), Partition{});
    while (!queue.empty()) {
        auto [perm, core] = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            AffinePermutation next = perm.compose(AffinePermutation::generator(n, i));
            Partition next_core = apply_s(core, i, n);
            auto it = visited.find(next.window());
            if (it != visited.end()) {
                detail::ensure(it->second == next_core,
                               "enumerate_dilation: core labels must be path-independent");
                continue;
            }
            if (!dominant_in_dilation(alcove_sample(next))) continue;
            visited.emplace(next.window(), next_core);
            queue.emplace_back(std::move(next), std::move(next_core));
        }
    }

    long long expected = 1;
    for (int i = 1; i < n; ++i) expected *= d;
    detail::ensure(static_cast<long long>(visited.size()) == expected,
                   "enumerate_dilation: expected d^(n-1) alcoves");
    std::vector<DilationState> out;
    out.reserve(visited.size());
    for (const auto& [window, core] : visited)
        out.push_back({AffinePermutation(n, window), core, core_to_word(core, d, n - 1)});
    return out;
}

// Wall-crossing cover edges among the kept alcoves, directed by core size;
// returned as index pairs into the state list.
inline std::vector<std::pair<std::size_t, std::size_t>> dilation_cover_edges(
    const std::vector<DilationState>& states) {
    std::map<std::vector<long long>, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i].perm.window(), i);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    const int n = states.empty() ? 0 : states.front().perm.n();
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (int g = 0; g < n; ++g) {
            AffinePermutation nb = states[i].perm.compose(AffinePermutation::generator(n, g));
            auto it = index.find(nb.window());
            if (it == index.end()) continue;
            if (states[i].core.boxes() < states[it->second].core.boxes())
                edges.emplace_back(i, it->second);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace alcomb
