#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gapalign/chainer.hpp"
#include "gapalign/oracle.hpp"
#include "support.hpp"

using namespace gapalign;
using gapalign::testing::seq;

namespace {

bool is_subsequence(const std::string& v, const std::string& s) {
    std::size_t i = 0;
    for (char c : s) {
        if (i < v.size() && v[i] == c) ++i;
    }
    return i == v.size();
}

std::size_t selected_index(const std::vector<CandidateAlignment>& chains, std::size_t m, const SelectionPolicy& policy) {
    std::vector<ScoredCandidate> scored;
    for (const auto& c : chains) scored.push_back(score_candidate(c, m));
    return select(scored, policy);
}

}  // namespace

TEST_CASE("worked DNA example: candidate set holds the four reference placements") {
    const Sequence s = seq(testing::dna_s), v = seq(testing::dna_v);
    const ChainResult result = enumerate_candidates(enumerate_matches(s, v), s, v);
    CHECK(result.outcome == ChainOutcome::complete);
    CHECK_FALSE(result.truncated);
    CHECK(result.effective_beam_width == 256);
    for (const auto& chain : testing::dna_placements()) {
        CHECK(std::find(result.candidates.begin(), result.candidates.end(), chain) != result.candidates.end());
    }
    std::set<CandidateAlignment> distinct;
    for (const auto& c : result.candidates) {
        CHECK(c.coverage() == v.length());
        CHECK(c.canonical());
        CHECK_NOTHROW(c.validate_against(s, v));
        distinct.insert(c);
    }
    CHECK(distinct.size() == result.candidates.size());
}

TEST_CASE("uncapped enumeration of the worked example is every embedding") {
    // Full-coverage chains biject with strictly increasing placements of V's
    // symbols in S; count those by a test-local DP.
    const std::string s(testing::dna_s), v(testing::dna_v);
    std::vector<std::uint64_t> ways(v.size() + 1, 0);
    ways[0] = 1;
    for (char c : s) {
        for (std::size_t i = v.size(); i > 0; --i) {
            if (v[i - 1] == c) ways[i] += ways[i - 1];
        }
    }
    const Sequence ss = seq(s), vv = seq(v);
    const ChainResult all = enumerate_candidates(enumerate_matches(ss, vv), ss, vv, ChainOptions::uncapped());
    CHECK(ways[v.size()] == 560);
    CHECK(all.candidates.size() == ways[v.size()]);
}

TEST_CASE("emitted order follows the policy") {
    const Sequence s = seq(testing::dna_s), v = seq(testing::dna_v);
    for (SelectionMode mode : {SelectionMode::mean_then_variance, SelectionMode::variance_only, SelectionMode::mean_only}) {
        ChainOptions options;
        options.policy.mode = mode;
        const ChainResult r = enumerate_candidates(enumerate_matches(s, v), s, v, options);
        REQUIRE_FALSE(r.candidates.empty());
        CHECK(selected_index(r.candidates, s.length(), options.policy) == 0);
        for (std::size_t i = 1; i < r.candidates.size(); ++i) {
            CHECK_FALSE(ranks_before(score_candidate(r.candidates[i], 32), score_candidate(r.candidates[i - 1], 32), mode));
        }
    }
}

TEST_CASE("identity input has a single zero-gap candidate") {
    const Sequence s = seq("ABC");
    const ChainResult r = enumerate_candidates(enumerate_matches(s, s), s, s);
    REQUIRE(r.candidates.size() == 1);
    CHECK(r.candidates[0] == CandidateAlignment({{0, 0, 3}}));
    CHECK(gap_runs(r.candidates[0], 3).empty());
}

TEST_CASE("no full cover keeps the best partial chains") {
    const Sequence s = seq("ABCAB"), v = seq("ABD");
    const MatchIndex index = enumerate_matches(s, v);
    const ChainResult strict = enumerate_candidates(index, s, v);
    CHECK(strict.outcome == ChainOutcome::no_full_cover);
    CHECK(strict.candidates.empty());
    REQUIRE_FALSE(strict.partial.empty());
    for (const auto& c : strict.partial) CHECK(c.coverage() == 2);

    ChainOptions relaxed;
    relaxed.require_full_coverage = false;
    const ChainResult loose = enumerate_candidates(index, s, v, relaxed);
    CHECK(loose.outcome == ChainOutcome::no_full_cover);
    CHECK(loose.candidates == strict.partial);

    const Sequence a = seq("AAAA"), b = seq("BB");
    const ChainResult disjoint = enumerate_candidates(enumerate_matches(a, b), a, b);
    CHECK(disjoint.outcome == ChainOutcome::no_full_cover);
    CHECK(disjoint.candidates.empty());
}

TEST_CASE("relaxed mode with a full cover is complete") {
    const Sequence s = seq("ABCAB"), v = seq("AB");
    ChainOptions relaxed;
    relaxed.require_full_coverage = false;
    const ChainResult r = enumerate_candidates(enumerate_matches(s, v), s, v, relaxed);
    CHECK(r.outcome == ChainOutcome::complete);
    for (const auto& c : r.candidates) CHECK(c.coverage() == 2);
}

TEST_CASE("caps") {
    const Sequence s = seq(testing::dna_s), v = seq(testing::dna_v);
    ChainOptions options;
    options.max_candidates = 5;
    const ChainResult r = enumerate_candidates(enumerate_matches(s, v), s, v, options);
    CHECK(r.candidates.size() == 5);
    CHECK(r.truncated);

    options = {};
    options.beam_width = 0;
    CHECK_THROWS_AS(options.validate(), Error);
    options = {};
    options.max_candidates = 0;
    CHECK_THROWS_AS(enumerate_candidates(enumerate_matches(s, v), s, v, options), Error);
}

TEST_CASE("a narrow beam still finds a full cover when one exists") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = testing::random_between(rng, 2, 16);
        const std::size_t n = testing::random_between(rng, 1, std::min<std::size_t>(m, 7));
        const Sequence s = seq(testing::random_string(rng, m, "AB")), v = seq(testing::random_string(rng, n, "AB"));
        ChainOptions narrow;
        narrow.beam_width = 1;
        const ChainResult r = enumerate_candidates(enumerate_matches(s, v), s, v, narrow);
        CHECK((r.outcome == ChainOutcome::complete) == is_subsequence(v.residues(), s.residues()));
        CHECK(r.effective_beam_width >= 1);
    }
}

TEST_CASE("beam pruning keeps the policy-optimal chain on small instances") {
    std::mt19937_64 rng(32);
    const SelectionMode modes[] = {SelectionMode::mean_then_variance, SelectionMode::variance_only,
                                   SelectionMode::mean_only};
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = testing::random_between(rng, 1, 12);
        const std::size_t n = testing::random_between(rng, 1, std::min<std::size_t>(m, 6));
        const Sequence s = seq(testing::random_string(rng, m, "AB")), v = seq(testing::random_string(rng, n, "AB"));
        const MatchIndex index = enumerate_matches(s, v);
        const auto exhaustive = oracle::exhaustive_chains(index, n);
        if (exhaustive.empty()) continue;
        for (SelectionMode mode : modes) {
            ChainOptions options;
            options.policy.mode = mode;
            const ChainResult r = enumerate_candidates(index, s, v, options);
            REQUIRE_FALSE(r.candidates.empty());
            const auto& best = exhaustive[selected_index(exhaustive, m, options.policy)];
            INFO("S=" << s.residues() << " V=" << v.residues());
            CHECK(r.candidates.front() == best);
        }
    }
}

TEST_CASE("full cover exists exactly when V is a subsequence of S") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = testing::random_between(rng, 1, 10);
        const std::size_t n = testing::random_between(rng, 1, m);
        const Sequence s = seq(testing::random_string(rng, m, "ACGT")), v = seq(testing::random_string(rng, n, "ACGT"));
        const ChainResult r = enumerate_candidates(enumerate_matches(s, v), s, v);
        CHECK((r.outcome == ChainOutcome::complete) == is_subsequence(v.residues(), s.residues()));
    }
}

TEST_CASE("swap for insertions") {
    const Sequence s = seq(testing::dna_s, "S"), v = seq(testing::dna_v, "V");
    const OperandRoles once = swap_for_insertions(s, v);
    CHECK(once.swapped);
    CHECK(once.s == v);
    CHECK(once.v == s);
    const OperandRoles twice = swap_for_insertions(once);
    CHECK_FALSE(twice.swapped);
    CHECK(twice.s == s);
    CHECK(twice.v == v);

    // A fragment carrying an extra symbol aligns once the roles are swapped.
    const Sequence longer = seq("ACXGT"), shorter = seq("ACGT");
    const OperandRoles roles = swap_for_insertions(shorter, longer);
    const ChainResult r = enumerate_candidates(enumerate_matches(roles.s, roles.v), roles.s, roles.v);
    CHECK(r.outcome == ChainOutcome::complete);
    CHECK(gap_runs(r.candidates.front(), roles.s.length()) == std::vector<std::size_t>{1});
}

TEST_CASE("substitution sites") {
    // V = X AB Y CD Z against S with room in every gap.
    const CandidateAlignment chain({{1, 2, 2}, {4, 6, 2}});
    const auto sites = substitution_sites(chain, 12, 7);
    REQUIRE(sites.size() == 3);
    CHECK(sites[0] == SubstitutionSite{0, 1, 1, 1});  // leading span right-aligned before the first block
    CHECK(sites[1] == SubstitutionSite{3, 1, 4, 1});  // left-aligned after the preceding block
    CHECK(sites[2] == SubstitutionSite{6, 1, 8, 1});
    // A gap too narrow for its span.
    const auto tight = substitution_sites(CandidateAlignment({{0, 0, 1}, {3, 1, 1}}), 2, 4);
    REQUIRE(tight.size() == 1);
    CHECK(tight[0] == SubstitutionSite{1, 2, 1, 0});
    CHECK(substitution_sites(CandidateAlignment({{0, 0, 3}}), 3, 3).empty());
}

TEST_CASE("render") {
    const Sequence s = seq(testing::dna_s), v = seq(testing::dna_v);
    const RenderedAlignment t1 = render(testing::dna_placement1(), s, v);
    CHECK(t1.fragment == "--T---ACTAG--------G---AG-------");
    CHECK(t1.reference == s.residues());
    CHECK(t1.marks == "  |   |||||        |   ||       ");

    const Sequence abc = seq("ABC");
    const RenderedAlignment id = render(CandidateAlignment({{0, 0, 3}}), abc, abc);
    CHECK(id.fragment == "ABC");
    CHECK(id.marks == "|||");
    CHECK(id.str() == "ABC\n|||\nABC\n");

    CHECK_THROWS_AS(render(CandidateAlignment({{0, 0, 2}}), seq("AB"), seq("BA")), Error);

    const RenderedAlignment subs = render(CandidateAlignment({{0, 0, 2}}), seq("ABXY"), seq("ABCD"), true);
    CHECK(subs.fragment == "ABcd");
}

TEST_CASE("render keeps V's matched symbols in order") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = testing::random_between(rng, 1, 40);
        const std::size_t n = testing::random_between(rng, 1, m);
        const auto e = testing::random_embedding(rng, m, n, "ACGT");
        const RenderedAlignment r = render(e.chain, seq(e.s), seq(e.v));
        CHECK(r.fragment.size() == m);
        std::string visible;
        for (char c : r.fragment) {
            if (c != '-') visible.push_back(c);
        }
        CHECK(visible == e.v);
    }
}
