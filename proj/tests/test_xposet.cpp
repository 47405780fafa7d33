#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "alcomb/xposet.hpp"

using namespace alcomb;

TEST_CASE("extended word construction") {
    CHECK(extended_word(Word::parse(4, "10")).letters == Word::parse(4, "103032321210"));
    CHECK(extended_word(Word::parse(4, "00")).letters == Word::parse(4, "003332221110"));
    CHECK(extended_word(Word::parse(2, "0")).letters == Word::parse(2, "0110"));
}

TEST_CASE("upper covers") {
    CHECK(upper_covers(Word::parse(4, "00")) == std::set<Word>{Word::parse(4, "10")});
    CHECK(upper_covers(Word::parse(4, "21")) ==
          std::set<Word>{Word::parse(4, "22"), Word::parse(4, "12")});
    CHECK(upper_covers(Word::parse(4, "33")).empty());
}

TEST_CASE("phi on the worked orbit") {
    CHECK(phi(Word::parse(4, "10")) == Word::parse(4, "30"));
    CHECK(phi(Word::parse(4, "30")) == Word::parse(4, "32"));
    CHECK(phi(Word::parse(4, "32")) == Word::parse(4, "10"));
    CHECK(phi(Word::parse(4, "12")) == Word::parse(4, "12"));
}

TEST_CASE("phi is a bijection of order dividing k+1") {
    for (int m = 1; m <= 5; ++m) {
        for (int k = 0; k <= 5; ++k) {
            std::set<Word> images;
            for (const Word& x : enumerate_words(m, k)) {
                Word cur = phi(x);
                images.insert(cur);
                for (int r = 1; r <= k; ++r) cur = phi(cur);
                REQUIRE(cur == x);  // phi^(k+1) = id
            }
            long long expected = 1;
            for (int i = 0; i < k; ++i) expected *= m;
            REQUIRE(static_cast<long long>(images.size()) == expected);
        }
    }
}

TEST_CASE("x_hasse basics") {
    auto edges42 = x_hasse(4, 2);
    CHECK(std::find(edges42.begin(), edges42.end(),
                    std::make_pair(Word::parse(4, "00"), Word::parse(4, "10"))) != edges42.end());
    CHECK(x_hasse(1, 3).empty());
}

TEST_CASE("phi-orbits are keyed by smallest member") {
    auto orbits = phi_orbits(4, 2);
    REQUIRE(orbits.size() == 6);
    CHECK(orbits[0][0] == Word::parse(4, "00"));
    for (const auto& orbit : orbits)
        for (const Word& x : orbit) CHECK(orbit[0] <= x);
}

TEST_CASE("graph symmetry of phi") {
    CHECK(check_phi_graph_automorphism(4, 2));
    CHECK(check_phi_graph_automorphism(2, 4));
    CHECK(check_phi_graph_automorphism(3, 3));
    // Orientation reversal does happen; the count is reported.
    PhiSymmetryReport rep = phi_symmetry_report(4, 2);
    CHECK(rep.symmetric);
    CHECK(rep.total_edges > 0);
    CHECK(rep.reversed_edges > 0);
}

TEST_CASE("cover classification predicts phi images") {
    // Case analysis at (m,k) = (4,3): every edge's predicted image and type
    // must match the transported edge.
    const int m = 4, k = 3;
    std::set<std::pair<Word, Word>> edges;
    for (auto& e : x_hasse(m, k)) edges.insert(e);
    std::map<std::pair<bool, int>, int> case_counts;  // (pivot, type) -> count
    for (const auto& [lo, hi] : edges) {
        CoverClass cc = classify_cover(lo, hi);
        ++case_counts[{cc.pivot_zero, static_cast<int>(cc.type)}];
        const Word a = phi(lo), b = phi(hi);
        if (cc.image_of_lower) {
            REQUIRE(*cc.image_of_lower == a);
            REQUIRE(*cc.image_of_upper == b);
        }
        const Word& image_lo = cc.image_reversed ? b : a;
        const Word& image_hi = cc.image_reversed ? a : b;
        REQUIRE(edges.count({image_lo, image_hi}) == 1);
        REQUIRE(cover_type(image_lo, image_hi) == cc.image_type);
    }
    // All four proof cases occur at this size.
    CHECK(case_counts.size() == 4);
}

TEST_CASE("edge exports") {
    auto edges = x_hasse(2, 1);
    CHECK(edges_to_dot(edges, "x_hasse") == "digraph x_hasse {\n  \"0\" -> \"1\";\n}\n");
    CHECK(edges_to_json(edges) == "{\"edges\":[[\"0\",\"1\"]]}");
}
