#include <doctest.h>

#include <random>

#include "gapalign/baselines.hpp"
#include "gapalign/oracle.hpp"
#include "support.hpp"

using namespace gapalign;
using gapalign::testing::seq;

TEST_CASE("global alignment examples") {
    const ScoredAlignment same = needleman_wunsch(seq("ACGT"), seq("ACGT"));
    CHECK(same.score == 4);
    CHECK(same.aligned_s == "ACGT");
    CHECK(same.aligned_v == "ACGT");
    CHECK(same.match_mask == std::vector<bool>(4, true));

    const ScoredAlignment one_gap = needleman_wunsch(seq("AC"), seq("C"));
    CHECK(one_gap.score == 0);
    CHECK(one_gap.aligned_s == "AC");
    CHECK(one_gap.aligned_v == "-C");
}

TEST_CASE("traceback prefers diagonal, then a gap in V") {
    // Both "A-" / "-A" style ties exist for S=AA, V=A; the gap goes into V first on the way back.
    const ScoredAlignment a = needleman_wunsch(seq("AA"), seq("A"));
    CHECK(a.score == 0);
    CHECK(a.aligned_s == "AA");
    CHECK(a.aligned_v == "-A");
    const ScoredAlignment b = needleman_wunsch(seq("A"), seq("C"));
    CHECK(b.aligned_s == "A");
    CHECK(b.aligned_v == "C");
    CHECK(b.score == -1);
}

TEST_CASE("local alignment examples") {
    const ScoredAlignment embedded = smith_waterman(seq("XXXACGTXXX"), seq("ACGT"));
    CHECK(embedded.score == 4);
    CHECK(embedded.aligned_s == "ACGT");
    CHECK(embedded.aligned_v == "ACGT");
    CHECK(embedded.s_start == 3);
    CHECK(embedded.v_start == 0);

    const ScoredAlignment disjoint = smith_waterman(seq("AAAA"), seq("BBB"));
    CHECK(disjoint.score == 0);
    CHECK(disjoint.aligned_s.empty());
    CHECK(disjoint.aligned_v.empty());
}

TEST_CASE("empty inputs are rejected") {
    CHECK_THROWS_AS(needleman_wunsch(Sequence(), seq("A")), Error);
    CHECK_THROWS_AS(smith_waterman(seq("A"), Sequence()), Error);
}

TEST_CASE("column score checks row shapes") {
    ScoredAlignment bad;
    bad.aligned_s = "A-";
    bad.aligned_v = "A";
    CHECK_THROWS_AS(column_score(bad, {}), Error);
    bad.aligned_v = "A-";
    CHECK_THROWS_AS(column_score(bad, {}), Error);
}

TEST_CASE("baseline invariants on random pairs") {
    std::mt19937_64 rng(41);
    const ScoringScheme schemes[] = {{1, -1, -1}, {2, -3, -1}, {3, -1, -2}};
    for (int trial = 0; trial < 400; ++trial) {
        const Sequence s = seq(testing::random_string(rng, testing::random_between(rng, 1, 14), "ACGT"));
        const Sequence v = seq(testing::random_string(rng, testing::random_between(rng, 1, 14), "ACGT"));
        for (const ScoringScheme& scheme : schemes) {
            const ScoredAlignment g = needleman_wunsch(s, v, scheme);
            const ScoredAlignment l = smith_waterman(s, v, scheme);
            CHECK(column_score(g, scheme) == g.score);
            CHECK(column_score(l, scheme) == l.score);
            CHECK(needleman_wunsch(v, s, scheme).score == g.score);
            CHECK(l.score >= 0);
            CHECK(l.score >= g.score);
        }
    }
}

TEST_CASE("identical inputs score length times match") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const Sequence s = seq(testing::random_string(rng, testing::random_between(rng, 1, 30), "ACGT"));
        CHECK(needleman_wunsch(s, s, {2, -1, -1}).score == 2.0 * s.length());
        CHECK(smith_waterman(s, s, {2, -1, -1}).score == 2.0 * s.length());
    }
}

TEST_CASE("scores match the exhaustive oracles on small pairs") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        const Sequence s = seq(testing::random_string(rng, testing::random_between(rng, 1, 6), "ACGT"));
        const Sequence v = seq(testing::random_string(rng, testing::random_between(rng, 1, 6), "ACGT"));
        for (const ScoringScheme& scheme : {ScoringScheme{1, -1, -1}, ScoringScheme{2, -3, -1}}) {
            CHECK(needleman_wunsch(s, v, scheme).score == oracle::exhaustive_global_score(s, v, scheme));
            CHECK(smith_waterman(s, v, scheme).score == oracle::exhaustive_local_score(s, v, scheme));
        }
    }
}
