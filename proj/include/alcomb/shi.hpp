#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alcomb/affine.hpp"
#include "alcomb/bijact.hpp"
#include "alcomb/sieve.hpp"

namespace alcomb {

// Sign vector of a generic point against the m-Shi hyperplanes x_i - x_j = s,
// 1 <= i < j <= k, -m+1 <= s <= m, in (i, j, s) lexicographic order.
inline std::string shi_signature(const RationalPoint& pt, int k, int m) {
    detail::require(static_cast<int>(pt.size()) == k, "shi_signature: rank mismatch");
    std::string sig;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            for (int s = -m + 1; s <= m; ++s) {
                const Rational diff = pt[i - 1] - pt[j - 1] - Rational(s);
                detail::require(diff != Rational(0), "shi_signature: point lies on a hyperplane");
                sig.push_back(diff > Rational(0) ? '+' : '-');
            }
    return sig;
}

struct ShiRegion {
    std::string signature;
    AffinePermutation minimal_alcove;
    RationalPoint sample;
};

inline long long parking_count(int k, int m) {
    long long expected = 1;
    for (int i = 1; i < k; ++i) expected *= static_cast<long long>(k) * m + 1;
    return expected;
}

// Regions of the m-Shi arrangement in rank k, each represented by its
// minimal alcove: BFS over the affine symmetric group by word length; the
// first alcove realizing a signature is the region's minimal alcove, and no
// signature may be first realized twice in one layer.  The walk stops once
// all (km+1)^(k-1) signatures are found and two further full layers add
// nothing new.
inline std::vector<ShiRegion> enumerate_regions(int k, int m) {
    detail::require(k >= 2, "enumerate_regions: need k >= 2");
    detail::require(m >= 1, "enumerate_regions: need m >= 1");
    const long long expected = parking_count(k, m);

    std::vector<ShiRegion> regions;
    std::map<std::string, std::size_t> by_signature;
    std::set<std::vector<long long>> visited;
    std::vector<AffinePermutation> layer{AffinePermutation::identity(k)};
    visited.insert(layer.front().window());
    int idle_layers = 0;
    for (int depth = 0; !layer.empty(); ++depth) {
        detail::require(depth < 500, "enumerate_regions: expected count not reached in budget");
        std::set<std::string> new_in_layer;
        for (const AffinePermutation& perm : layer) {
            const RationalPoint sample = alcove_sample(perm);
            const std::string sig = shi_signature(sample, k, m);
            if (by_signature.count(sig)) continue;
            detail::ensure(!new_in_layer.count(sig),
                           "enumerate_regions: minimal alcove must be unique per region");
            new_in_layer.insert(sig);
            by_signature.emplace(sig, regions.size());
            regions.push_back({sig, perm, sample});
        }
        if (new_in_layer.empty() && static_cast<long long>(regions.size()) == expected) {
            if (++idle_layers == 2) break;
        } else {
            idle_layers = 0;
        }
        std::vector<AffinePermutation> next;
        for (const AffinePermutation& perm : layer)
            for (int i = 0; i < k; ++i) {
                AffinePermutation nb = perm.compose(AffinePermutation::generator(k, i));
                if (visited.insert(nb.window()).second) next.push_back(nb);
            }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    detail::require(static_cast<long long>(regions.size()) == expected,
                    "enumerate_regions: region count mismatch");
    return regions;
}

struct ParkingFunction {
    std::vector<int> entries;
    int m = 1;

    std::string to_string() const {
        bool digits = true;
        for (int e : entries) digits = digits && e <= 9;
        std::ostringstream out;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (!digits && i > 0) out << ',';
            out << entries[i];
        }
        return out.str();
    }

    friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;
};

// m-parking function test: the increasing sort b satisfies b_i <= m(i-1).
inline bool is_parking(const std::vector<int>& a, int m) {
    std::vector<int> b = a;
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] < 0 || b[i] > m * static_cast<int>(i)) return false;
    return true;
}

// All m-parking functions of length k, in lexicographic order; there are
// (km+1)^(k-1) of them.
inline std::vector<ParkingFunction> enumerate_parking(int k, int m) {
    detail::require(k >= 1 && m >= 1, "enumerate_parking: need k >= 1, m >= 1");
    std::vector<ParkingFunction> out;
    const int hi = m * (k - 1);
    std::vector<int> cur(k, 0);
    while (true) {
        if (is_parking(cur, m)) out.push_back({cur, m});
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == hi) cur[pos--] = 0;
        if (pos < 0) break;
        ++cur[pos];
    }
    return out;
}

// Pak-Stanley label of a region, by the separating-hyperplane closed form:
// each hyperplane x_i - x_j = s separating the region from the fundamental
// one contributes e_j when s <= 0 and e_i when s > 0.
inline ParkingFunction pak_stanley(const ShiRegion& region, int k, int m) {
    RationalPoint p0(k);
    for (int i = 1; i <= k; ++i) p0[i - 1] = Rational(k - i, k);
    const std::string fundamental = shi_signature(p0, k, m);
    std::vector<int> label(k, 0);
    std::size_t idx = 0;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            for (int s = -m + 1; s <= m; ++s, ++idx)
                if (region.signature[idx] != fundamental[idx]) ++label[(s <= 0 ? j : i) - 1];
    return {label, m};
}

// Every coset of <(1,...,1)> in Z_{km+1}^k holds exactly one parking
// function; pick it out of the coset of u by scanning all km+1 shifts.
inline ParkingFunction coset_parking(const Word& u, int k, int m) {
    const int q = k * m + 1;
    detail::require(u.modulus() == q && static_cast<int>(u.size()) == k,
                    "coset_parking: need a length-k word over Z/(km+1)Z");
    detail::require(u.sum_mod() == detail::mod(k * static_cast<long long>(m), q),
                    "coset_parking: letters must sum to km (mod km+1)");
    std::vector<int> found;
    int found_c = -1;
    for (int c = 0; c <= k * m; ++c) {
        const Word shifted = shift(u, c);
        if (is_parking(shifted.letters(), m)) {
            detail::ensure(found_c < 0, "coset_parking: coset holds two parking functions");
            found = shifted.letters();
            found_c = c;
        }
    }
    detail::ensure(found_c >= 0, "coset_parking: coset holds no parking function");
    return {found, m};
}

// Translation matching Sommers' dilation statement: the integer vector t
// such that the alcoves (translate_t o w)^{-1}, over the dilation alcoves w,
// are exactly the minimal alcoves of the m-Shi arrangement.  Translations
// only matter modulo the diagonal, so the search fixes t_k = 0; the result
// is renormalized to sum zero when the sum is divisible by k (for k = 2 and
// odd m the matching shift is a half-coroot, so no sum-zero integer vector
// exists and the t_k = 0 representative is returned instead).
inline std::vector<int> sommers_translation(int k, int m) {
    detail::require(k >= 2, "sommers_translation: need k >= 2");
    const std::vector<ShiRegion> regions = enumerate_regions(k, m);
    const std::vector<DilationState> dilation = enumerate_dilation(k, k * m + 1);

    std::set<std::vector<long long>> target;
    for (const ShiRegion& r : regions) target.insert(alcove_key(r.sample));

    RationalPoint p0(k);
    for (int i = 1; i <= k; ++i) p0[i - 1] = Rational(k - i, k);

    const int box = k * m + 1;
    std::vector<int> t(k, 0);
    std::vector<std::vector<int>> matches;
    auto scan = [&](auto&& self, int pos) -> void {
        if (pos == k - 1) {
            // (translate_t o w)^{-1} sends p0 to w^{-1} acting on p0 - t.
            std::set<std::vector<long long>> candidate;
            RationalPoint base = p0;
            for (int i = 0; i < k; ++i) base[i] -= Rational(t[i]);
            for (const DilationState& st : dilation)
                candidate.insert(alcove_key(act(st.perm.inverse(), base)));
            if (candidate == target) matches.push_back(t);
            return;
        }
        for (int v = -box; v <= box; ++v) {
            t[pos] = v;
            self(self, pos + 1);
        }
    };
    scan(scan, 0);
    detail::require(!matches.empty(),
                    "sommers_translation: no translation matches in the search box (" +
                        std::to_string(regions.size()) + " regions, " +
                        std::to_string(dilation.size()) + " dilation alcoves)");
    detail::ensure(matches.size() == 1, "sommers_translation: translation must be unique");
    std::vector<int> best = matches.front();
    long long sum = std::accumulate(best.begin(), best.end(), 0LL);
    if (sum % k == 0)
        for (int& v : best) v -= static_cast<int>(sum / k);
    return best;
}

// The coset labeling of Shi regions: each dilation alcove w carries a word
// u = w_map(word(w)) summing to km; its region (the one whose minimal alcove
// is (translate_t o w)^{-1}) receives the parking function in u's coset.
struct RegionLabeling {
    std::vector<int> translation;
    std::vector<ParkingFunction> labels;  // parallel to the region list
};

inline RegionLabeling new_labeling(int k, int m, const std::vector<ShiRegion>& regions,
                                   const std::vector<DilationState>& dilation) {
    const std::vector<int> t = sommers_translation(k, m);
    std::map<std::vector<long long>, std::size_t> region_by_key;
    for (std::size_t i = 0; i < regions.size(); ++i)
        region_by_key.emplace(alcove_key(regions[i].sample), i);

    RationalPoint base(k);
    for (int i = 1; i <= k; ++i) base[i - 1] = Rational(k - i, k) - Rational(t[i - 1]);

    std::vector<ParkingFunction> labels(regions.size());
    std::vector<bool> assigned(regions.size(), false);
    for (const DilationState& st : dilation) {
        const Word u = w_map(st.word);
        const ParkingFunction pf = coset_parking(u, k, m);
        auto it = region_by_key.find(alcove_key(act(st.perm.inverse(), base)));
        detail::ensure(it != region_by_key.end(),
                       "new_labeling: translated alcove must land on a minimal alcove");
        detail::ensure(!assigned[it->second], "new_labeling: region assigned twice");
        assigned[it->second] = true;
        labels[it->second] = pf;
    }
    detail::ensure(std::all_of(assigned.begin(), assigned.end(), [](bool b) { return b; }),
                   "new_labeling: every region must receive a label");
    std::set<ParkingFunction> distinct(labels.begin(), labels.end());
    detail::ensure(static_cast<long long>(distinct.size()) == parking_count(k, m),
                   "new_labeling: labels must biject onto the parking functions");
    return {t, labels};
}

inline RegionLabeling new_labeling(int k, int m) {
    return new_labeling(k, m, enumerate_regions(k, m), enumerate_dilation(k, k * m + 1));
}

// CSP for m-parking functions of length k under rotation, order k, with the
// polynomial of W_{km+1}^{k-1}.
inline CspReport parking_csp(int k, int m) {
    detail::require(k >= 1 && m >= 1, "parking_csp: need k >= 1, m >= 1");
    std::vector<std::vector<int>> elements;
    for (const ParkingFunction& pf : enumerate_parking(k, m)) elements.push_back(pf.entries);
    auto rotate = [](const std::vector<int>& a) {
        std::vector<int> out(a.begin() + 1, a.end());
        out.push_back(a.front());
        return out;
    };
    return csp_check(elements, rotate, k, w_poly(k * m + 1, k - 1));
}

// Region report: one CSV row per region with both labelings.
inline std::string shi_report_csv(int k, int m) {
    const std::vector<ShiRegion> regions = enumerate_regions(k, m);
    const std::vector<DilationState> dilation = enumerate_dilation(k, k * m + 1);
    const RegionLabeling labeling = new_labeling(k, m, regions, dilation);
    std::ostringstream out;
    out << "region_id,signature,minimal_alcove,pak_stanley,coset\n";
    for (std::size_t i = 0; i < regions.size(); ++i) {
        out << i << ',' << regions[i].signature << ','
            << "[";
        const auto& w = regions[i].minimal_alcove.window();
        for (std::size_t j = 0; j < w.size(); ++j) out << (j ? " " : "") << w[j];
        out << "]," << pak_stanley(regions[i], k, m).to_string() << ','
            << labeling.labels[i].to_string() << '\n';
    }
    return out.str();
}

}  // namespace alcomb
