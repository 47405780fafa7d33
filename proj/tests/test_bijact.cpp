#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "alcomb/bijact.hpp"

using namespace alcomb;

namespace {

PartitionedWord pw(int m, const std::string& text) { return PartitionedWord::parse(m, text); }

// Test-only oracle: every divider placement of a word, independent of the
// algorithms under test.
std::vector<PartitionedWord> all_partitions_of(const Word& w) {
    const int m = w.modulus();
    const int len = static_cast<int>(w.size());
    std::vector<PartitionedWord> out;
    std::vector<int> dividers(static_cast<std::size_t>(m - 1), 0);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == m - 1) {
            out.emplace_back(w, dividers);
            return;
        }
        for (int d = lo; d <= len; ++d) {
            dividers[pos] = d;
            self(self, pos + 1, d);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

TEST_CASE("partitioned word structure and text format") {
    PartitionedWord p = pw(4, "3|2|1|0302");
    CHECK(p.word() == Word::parse(4, "3210302"));
    CHECK(p.dividers() == std::vector<int>{1, 2, 3});
    CHECK(p.sigma() == 3);
    CHECK(p.to_string() == "3|2|1|0302");
    CHECK(pw(4, "3|2|1|0302") == pw(4, "3|2|1|0302"));
    CHECK(pw(3, ".|1|.").to_string() == "·|1|·");
    CHECK(pw(3, "·|1|·") == pw(3, ".|1|."));

    // sigma = 3 puts label 0 on the leftmost block.
    CHECK(p.label_of_position(1) == 0);
    CHECK(p.label_of_position(4) == 3);
    CHECK(p.position_of_label(0) == 1);
    CHECK(p.block_of_letter(1) == 1);
    CHECK(p.block_of_letter(4) == 4);
    CHECK(p.block(4) == std::vector<int>{0, 3, 0, 2});
}

TEST_CASE("insertion map p") {
    CHECK(p_map(Word::parse(4, "3323313")) == pw(4, "3|2|1|0302"));
    CHECK(p_map(Word::parse(4, "003")) == pw(4, "003|.|.|."));
    CHECK(p_map(Word::parse(2, "01")) == pw(2, "01|."));
    CHECK(p_map(Word(4)) == pw(4, ".|.|.|."));
}

TEST_CASE("read-off map q") {
    QResult full = q_map(pw(4, "3|2|1|0302"));
    CHECK(full.trace == Word::parse(4, "3323313"));
    CHECK(full.leftover.word().empty());

    QResult partial = q_map(pw(4, "3210|30|2|."));
    CHECK(partial.trace == Word::parse(4, "3"));
    CHECK(partial.leftover == pw(4, "210|30|2|."));

    QResult empty = q_map(pw(3, ".|.|."));
    CHECK(empty.trace.empty());
    CHECK(empty.leftover == pw(3, ".|.|."));
}

TEST_CASE("read-off trace reproduces the worked table") {
    const std::vector<QTraceRow> rows = q_map_trace(pw(4, "3|2|1|0302"));
    REQUIRE(rows.size() == 8);
    const std::vector<std::tuple<int, int, std::string, std::string>> expected{
        {1, 0, "3|2|1|0302", "·"},      {2, 3, "·|2|1|0302", "3"},
        {3, 3, "·|2|1|302", "33"},      {4, 2, "·|2|1|02", "332"},
        {5, 3, "·|2|·|02", "3323"}, {6, 3, "·|2|·|2", "33233"},
        {7, 1, "·|2|·|·", "332331"},
        {8, 3, "·|·|·|·", "3323313"}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].step == std::get<0>(expected[i]));
        CHECK(rows[i].label == std::get<1>(expected[i]));
        CHECK(rows[i].state == std::get<2>(expected[i]));
        CHECK(rows[i].trace == std::get<3>(expected[i]));
    }
}

TEST_CASE("success predicate") {
    CHECK(is_successful(pw(4, "3|2|1|0302")));
    CHECK_FALSE(is_successful(pw(4, "3210|30|2|.")));
    CHECK(is_successful(pw(3, ".|.|.")));
}

TEST_CASE("balancing matrix matches the worked figure") {
    BalancingMatrix left = balancing_matrix(pw(4, "3|2|1|0302"));
    // Row 5 holds the letter 3 in block 4: columns 4, 1, 2 wrap around.
    CHECK(left.at(5, 4));
    CHECK(left.at(5, 1));
    CHECK(left.at(5, 2));
    CHECK_FALSE(left.at(5, 3));
    CHECK(left.column_sums() == std::vector<int>{3, 3, 3, 2});

    BalancingMatrix right = balancing_matrix(pw(4, "3210|30|2|."));
    CHECK(right.column_sums() == std::vector<int>{3, 3, 3, 2});

    CHECK(balancing_matrix(pw(2, "00|.")).column_sums() == std::vector<int>{0, 0});
}

TEST_CASE("equitable predicate") {
    CHECK(is_equitable(pw(4, "3210|30|2|.")));
    CHECK(is_equitable(pw(4, "3|2|1|0302")));
    CHECK_FALSE(is_equitable(pw(4, "3210302|.|.|.")));
}

TEST_CASE("rightmost equitable partition") {
    CHECK(rightmost_equitable(Word::parse(4, "3210302")) == pw(4, "3210|30|2|."));
    CHECK(rightmost_equitable(Word(3)) == pw(3, ".|.|."));
    CHECK(rightmost_equitable(Word::parse(4, "003")) == pw(4, "003|.|.|."));
}

TEST_CASE("successful partition construction walks the worked states") {
    const auto states = successful_partition_trace(Word::parse(4, "3210302"));
    REQUIRE(states.size() == 4);
    CHECK(states[0] == pw(4, "3210|30|2|."));
    CHECK(states[1] == pw(4, "3|210|30|2"));
    CHECK(states[2] == pw(4, "3|2|10|302"));
    CHECK(states[3] == pw(4, "3|2|1|0302"));

    CHECK(successful_partition(Word::parse(4, "003")) == pw(4, "003|.|.|."));
}

TEST_CASE("algorithm progress never revisits a divider tuple") {
    for (const Word& w : enumerate_words(3, 6)) {
        const auto states = successful_partition_trace(w);
        std::set<std::vector<int>> seen;
        for (std::size_t i = 0; i < states.size(); ++i) {
            REQUIRE(seen.insert(states[i].dividers()).second);
            if (i > 0) {
                // Letters only ever move right: dividers weakly decrease.
                for (std::size_t j = 0; j < states[i].dividers().size(); ++j)
                    REQUIRE(states[i].dividers()[j] <= states[i - 1].dividers()[j]);
            }
        }
    }
}

TEST_CASE("q undoes p") {
    // Every length with m^L <= 50000.
    for (int m = 2; m <= 5; ++m) {
        long long size = 1;
        for (int len = 0; size <= 50000; ++len, size *= m) {
            for (const Word& x : enumerate_words(m, len)) {
                QResult res = q_map(p_map(x));
                REQUIRE(res.trace == x);
                REQUIRE(res.leftover.word().empty());
            }
        }
    }
}

TEST_CASE("uniqueness of the successful partition (exhaustive oracle)") {
    for (int m = 2; m <= 4; ++m)
        for (int len = 0; len <= 5; ++len)
            for (const Word& w : enumerate_words(m, len)) {
                std::vector<PartitionedWord> successes;
                std::vector<PartitionedWord> equitables;
                for (const PartitionedWord& cand : all_partitions_of(w)) {
                    if (is_successful(cand)) successes.push_back(cand);
                    if (is_equitable(cand)) equitables.push_back(cand);
                }
                REQUIRE(successes.size() == 1);
                REQUIRE(successes[0] == successful_partition(w));
                // Successful implies equitable; rightmost dominates all.
                REQUIRE(is_equitable(successes[0]));
                const PartitionedWord rightmost = rightmost_equitable(w);
                for (const PartitionedWord& eq : equitables)
                    for (std::size_t j = 0; j < eq.dividers().size(); ++j)
                        REQUIRE(rightmost.dividers()[j] >= eq.dividers()[j]);
            }
}

TEST_CASE("tree ranks") {
    auto rank0 = tree_rank(3, 0);
    REQUIRE(rank0.size() == 1);
    CHECK(rank0[0] == pw(3, ".|.|."));

    auto rank1 = tree_rank(3, 1);
    REQUIRE(rank1.size() == 3);
    CHECK(rank1[0] == pw(3, ".|.|0"));
    CHECK(rank1[1] == pw(3, "2|.|."));
    CHECK(rank1[2] == pw(3, ".|1|."));

    auto rank2 = tree_rank(3, 2);
    std::set<PartitionedWord> nodes(rank2.begin(), rank2.end());
    CHECK(nodes.count(pw(3, ".|.|00")) == 1);
    CHECK(nodes.count(pw(3, ".|1|0")) == 1);
    CHECK(nodes.count(pw(3, "2|.|0")) == 1);
}

TEST_CASE("tree membership equals read-off success") {
    for (int m = 2; m <= 4; ++m)
        for (int r = 0; r <= (m == 2 ? 6 : 4); ++r) {
            std::set<PartitionedWord> rank;
            for (const PartitionedWord& node : tree_rank(m, r)) rank.insert(node);
            for (const Word& w : enumerate_words(m, r))
                for (const PartitionedWord& cand : all_partitions_of(w))
                    REQUIRE(rank.count(cand) == static_cast<std::size_t>(is_successful(cand)));
        }
}

TEST_CASE("dendrodistinctivity at small rank") {
    for (int m = 2; m <= 4; ++m)
        for (int r = 0; r <= 5; ++r) {
            std::set<Word> words;
            for (const PartitionedWord& node : tree_rank(m, r)) words.insert(node.word());
            long long expected = 1;
            for (int i = 0; i < r; ++i) expected *= m;
            REQUIRE(static_cast<long long>(tree_rank(m, r).size()) == expected);
            REQUIRE(static_cast<long long>(words.size()) == expected);
        }
}

TEST_CASE("forward map on the worked orbits") {
    CHECK(w_map(Word::parse(4, "10")) == Word::parse(4, "133"));
    CHECK(w_map(Word::parse(4, "00")) == Word::parse(4, "003"));
    CHECK(w_map(Word::parse(4, "12")) == Word::parse(4, "111"));
    CHECK(w_map(Word(4)) == Word::parse(4, "3"));
}

TEST_CASE("inverse map on the worked orbits") {
    CHECK(w_inverse(Word::parse(4, "003")) == Word::parse(4, "00"));
    CHECK(w_inverse(Word::parse(4, "133")) == Word::parse(4, "10"));
    CHECK(w_inverse(Word::parse(4, "111")) == Word::parse(4, "12"));
    CHECK_THROWS_AS(w_inverse(Word::parse(4, "100")), std::invalid_argument);
}

TEST_CASE("round trip and equivariance at moderate scale") {
    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 4; ++k) {
            for (const Word& x : enumerate_words(m, k)) {
                REQUIRE(w_inverse(w_map(x)) == x);
                REQUIRE(w_map(phi(x)) == rotate_left(w_map(x)));
                // The forward map equals insertion followed by forgetting the
                // partition, on words with m-1 appended.
                REQUIRE(w_map(x) == p_map(x.with_appended(m - 1)).word());
            }
            for (const Word& u : enumerate_w_words(m, k)) REQUIRE(w_map(w_inverse(u)) == u);
        }
}
