#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gapalign/matcher.hpp"
#include "support.hpp"

using namespace gapalign;
using gapalign::testing::seq;

namespace {

// Test-local evaluation of the three closed forms by explicit loops over offsets.
ComparisonCounters loop_counts(std::uint64_t m, std::uint64_t n, std::uint64_t lo = 1) {
    ComparisonCounters c;
    for (std::uint64_t j = n; j >= lo; --j) {
        for (std::uint64_t a = 0; a + j <= n; ++a) {
            for (std::uint64_t b = 0; b + j <= m; ++b) {
                ++c.substring_comparisons;
                c.char_comparisons_worst_case += j;
            }
        }
        c.paper_formula_value += (m - j) * j;
        if (j == lo) break;
    }
    return c;
}

}  // namespace

TEST_CASE("input contract") {
    CHECK_THROWS_AS(enumerate_matches(seq("ABC"), Sequence()), Error);
    try {
        enumerate_matches(seq("AB"), seq("ABC"));
        FAIL("expected order violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::order_violation);
        CHECK(std::string(e.what()).find("swap") != std::string::npos);
    }
    CHECK_THROWS_AS(enumerate_matches(seq("AB"), seq("A"), MatchOptions{0, false}), Error);
}

TEST_CASE("full window compares against every S offset, including the last") {
    const MatchIndex index = enumerate_matches(seq("FTFTALILLAVAV"), seq("FTALLAAV"), MatchOptions{8, false});
    CHECK(index.counters.substring_comparisons == 6);
    CHECK(index.block_count() == 0);
    CHECK(index.last_window == 8);
}

TEST_CASE("identity input") {
    const MatchIndex index = enumerate_matches(seq("ABC"), seq("ABC"));
    REQUIRE(index.by_size.count(3) == 1);
    CHECK(index.by_size.at(3) == std::vector<MatchBlock>{{0, 0, 3}});
    CHECK(index.by_size.at(1).size() == 3);
}

TEST_CASE("closed-form counters") {
    SUBCASE("single symbol") {
        const auto c = count_comparisons(1, 1);
        CHECK(c.substring_comparisons == 1);
        CHECK(c.paper_formula_value == 0);
    }
    SUBCASE("full window only") { CHECK(count_comparisons(13, 8, 8).substring_comparisons == 6); }
    SUBCASE("worked DNA sizes, pinned") {
        const auto c = count_comparisons(32, 9);
        CHECK(c == loop_counts(32, 9));
        CHECK(c.substring_comparisons == 1320);
        CHECK(c.paper_formula_value == 1155);
        CHECK(c.char_comparisons_worst_case == 4620);
        CHECK(c.char_comparisons == 0);
    }
    SUBCASE("full descent on the letter example, pinned") {
        const auto c = count_comparisons(13, 8);
        CHECK(c == loop_counts(13, 8));
        CHECK(c.substring_comparisons == 384);
        CHECK(c.paper_formula_value == 264);
    }
    SUBCASE("agrees with explicit loops across sizes") {
        for (std::uint64_t m = 1; m <= 25; ++m) {
            for (std::uint64_t n = 1; n <= m; ++n) {
                for (std::uint64_t lo = 1; lo <= n; lo += 3) {
                    CHECK(count_comparisons(m, n, lo) == loop_counts(m, n, lo));
                }
            }
        }
    }
}

TEST_CASE("measured counters equal the closed form and are deterministic") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = testing::random_between(rng, 1, 40);
        const std::size_t n = testing::random_between(rng, 1, std::min<std::size_t>(m, 12));
        const Sequence s = seq(testing::random_string(rng, m, "ACG"));
        const Sequence v = seq(testing::random_string(rng, n, "ACG"));
        const MatchIndex a = enumerate_matches(s, v);
        const MatchIndex b = enumerate_matches(s, v);
        const auto predicted = count_comparisons(m, n);
        CHECK(a.counters.substring_comparisons == predicted.substring_comparisons);
        CHECK(a.counters.paper_formula_value == predicted.paper_formula_value);
        CHECK(a.counters.char_comparisons_worst_case == predicted.char_comparisons_worst_case);
        CHECK(a.counters.char_comparisons >= a.counters.substring_comparisons);
        CHECK(a.counters.char_comparisons <= predicted.char_comparisons_worst_case);
        CHECK(a.counters == b.counters);
        CHECK(a.by_size == b.by_size);
    }
}

TEST_CASE("every window j+1 match contains two overlapping window j matches") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = testing::random_between(rng, 2, 20);
        const std::size_t n = testing::random_between(rng, 2, std::min<std::size_t>(m, 10));
        const MatchIndex index =
            enumerate_matches(seq(testing::random_string(rng, m, "AB")), seq(testing::random_string(rng, n, "AB")));
        for (const auto& [j, blocks] : index.by_size) {
            if (j == 1) continue;
            REQUIRE(index.by_size.count(j - 1) == 1);
            const auto& smaller = index.by_size.at(j - 1);
            const std::set<MatchBlock> lookup(smaller.begin(), smaller.end());
            for (const MatchBlock& b : blocks) {
                CHECK(lookup.count({b.v_start, b.s_start, j - 1}) == 1);
                CHECK(lookup.count({b.v_start + 1, b.s_start + 1, j - 1}) == 1);
            }
        }
    }
}

TEST_CASE("all-equal strings produce quadratically many blocks") {
    const MatchIndex index = enumerate_matches(seq("AAAA"), seq("AA"));
    CHECK(index.by_size.at(2).size() == 3);
    CHECK(index.by_size.at(1).size() == 8);
    const auto all = index.all_blocks();
    CHECK(all.size() == 11);
    CHECK(all.front().length == 2);
}

TEST_CASE("min_window and early stop") {
    const Sequence s = seq("AGTCTAACTAGAATATACCGTACAGTACGAAG");
    const Sequence v = seq("TACTAGGAG");
    const MatchIndex limited = enumerate_matches(s, v, MatchOptions{2, false});
    CHECK(limited.by_size.count(1) == 0);
    CHECK(limited.counters.substring_comparisons == count_comparisons(32, 9, 2).substring_comparisons);

    const MatchIndex early = enumerate_matches(s, v, MatchOptions{1, true});
    CHECK(admits_full_cover(early));
    CHECK(early.last_window >= 1);
    CHECK(early.counters.substring_comparisons <= count_comparisons(32, 9).substring_comparisons);

    // A full cover needs single-symbol windows here, so early stop still reaches j=1.
    CHECK(early.last_window == 1);
    CHECK_FALSE(admits_full_cover(enumerate_matches(seq("AAAA"), seq("AB"))));
}
