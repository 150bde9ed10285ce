#include "gapalign/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <fmt/format.h>

#include "gapalign/oracle.hpp"

namespace gapalign::verify {

Suite suite_from_string(std::string_view text) {
    if (text == "matcher") return Suite::matcher;
    if (text == "chainer") return Suite::chainer;
    if (text == "nw") return Suite::nw;
    if (text == "sw") return Suite::sw;
    if (text == "all") return Suite::all;
    throw Error(ErrorKind::usage, fmt::format("unknown suite '{}' (expected matcher, chainer, nw, sw or all)", text));
}

std::string_view to_string(Suite suite) {
    switch (suite) {
    case Suite::matcher: return "matcher";
    case Suite::chainer: return "chainer";
    case Suite::nw: return "nw";
    case Suite::sw: return "sw";
    case Suite::all: return "all";
    }
    return "unknown";
}

namespace {

struct Bounds {
    std::size_t m;
    std::size_t n;
};

Bounds default_bounds(Suite suite) {
    switch (suite) {
    case Suite::matcher: return {20, 10};
    case Suite::chainer: return {12, 6};
    default: return {oracle::max_score_length, oracle::max_score_length};
    }
}

Bounds bounds_for(const Config& config, Suite suite) {
    Bounds b = default_bounds(suite);
    if (config.max_m > 0) b.m = config.max_m;
    if (config.max_n > 0) b.n = config.max_n;
    if (suite == Suite::matcher || suite == Suite::chainer) b.n = std::min(b.n, b.m);
    return b;
}

std::mt19937_64 case_rng(std::uint64_t seed, Suite suite, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

std::string random_string(std::mt19937_64& rng, std::size_t length, std::string_view alphabet) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string out(length, ' ');
    for (char& c : out) c = alphabet[pick(rng)];
    return out;
}

std::size_t random_length(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

constexpr std::string_view letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";

std::optional<std::string> check_matcher(const Sequence& s, const Sequence& v, const Targets& t) {
    const MatchIndex index = t.matcher(s, v);
    for (std::size_t j = 1; j <= v.length(); ++j) {
        auto expected = oracle::naive_match_scan(s, v, j);
        std::vector<MatchBlock> got;
        if (auto it = index.by_size.find(j); it != index.by_size.end()) got = it->second;
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        if (got != expected) {
            return fmt::format("window {}: matcher found {} blocks, oracle {}", j, got.size(), expected.size());
        }
    }
    const auto predicted = count_comparisons(s.length(), v.length());
    if (index.counters.substring_comparisons != predicted.substring_comparisons) {
        return fmt::format("substring comparisons {} differ from closed form {}", index.counters.substring_comparisons,
                           predicted.substring_comparisons);
    }
    return std::nullopt;
}

std::optional<std::string> check_chainer(const Sequence& s, const Sequence& v, const Targets& t) {
    const MatchIndex index = enumerate_matches(s, v);
    auto got = t.chainer(index, s, v);
    auto expected = oracle::exhaustive_chains(index, v.length());
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    if (got != expected) {
        return fmt::format("chainer emitted {} chains, exhaustive search found {}", got.size(), expected.size());
    }
    return std::nullopt;
}

std::string strip_gaps(const std::string& row) {
    std::string out;
    for (char c : row) {
        if (c != gap_symbol) out.push_back(c);
    }
    return out;
}

std::optional<std::string> check_dp(const Sequence& s, const Sequence& v, bool local, const Targets& t) {
    static const ScoringScheme schemes[] = {{1, -1, -1}, {2, -3, -1}};
    for (const ScoringScheme& scheme : schemes) {
        const ScoredAlignment a = local ? t.sw(s, v, scheme) : t.nw(s, v, scheme);
        const double expected =
            local ? oracle::exhaustive_local_score(s, v, scheme) : oracle::exhaustive_global_score(s, v, scheme);
        const std::string tag = fmt::format("scheme ({},{},{})", scheme.match, scheme.mismatch, scheme.gap);
        if (a.score != expected) return fmt::format("{}: score {} but oracle says {}", tag, a.score, expected);
        if (column_score(a, scheme) != a.score) return fmt::format("{}: column rescoring disagrees", tag);
        const std::string ss = strip_gaps(a.aligned_s);
        const std::string vv = strip_gaps(a.aligned_v);
        const bool rows_ok = local ? s.residues().compare(a.s_start, ss.size(), ss) == 0 &&
                                         v.residues().compare(a.v_start, vv.size(), vv) == 0
                                   : ss == s.residues() && vv == v.residues();
        if (!rows_ok) return fmt::format("{}: aligned rows do not reproduce the inputs", tag);
    }
    return std::nullopt;
}

std::optional<Counterexample> run_suite(Suite suite, const Config& config, const Targets& targets,
                                        std::size_t& cases_run) {
    const Bounds b = bounds_for(config, suite);
    for (std::size_t i = 0; i < config.cases; ++i) {
        auto rng = case_rng(config.seed, suite, i);
        std::string s_text, v_text;
        std::optional<std::string> detail;
        if (suite == Suite::matcher) {
            const std::size_t m = random_length(rng, 1, b.m);
            const std::size_t n = random_length(rng, 1, std::min(m, b.n));
            switch (i % 5) {
            case 0:  // all-equal symbols: quadratically many blocks
                s_text.assign(m, 'A');
                v_text.assign(n, 'A');
                break;
            case 1:
            case 2:
                s_text = random_string(rng, m, "AC");
                v_text = random_string(rng, n, "AC");
                break;
            default:
                s_text = random_string(rng, m, letters);
                v_text = random_string(rng, n, letters);
                break;
            }
            detail = check_matcher(Sequence("S", s_text), Sequence("V", v_text), targets);
        } else if (suite == Suite::chainer) {
            const std::size_t m = random_length(rng, 1, b.m);
            const std::size_t n = random_length(rng, 1, std::min(m, b.n));
            s_text = random_string(rng, m, "AB");
            v_text = random_string(rng, n, "AB");
            detail = check_chainer(Sequence("S", s_text), Sequence("V", v_text), targets);
        } else {
            s_text = random_string(rng, random_length(rng, 1, b.m), "ACGT");
            v_text = random_string(rng, random_length(rng, 1, b.n), "ACGT");
            detail = check_dp(Sequence("S", s_text), Sequence("V", v_text), suite == Suite::sw, targets);
        }
        ++cases_run;
        if (detail) return Counterexample{suite, config.seed, i, s_text, v_text, *detail};
    }
    return std::nullopt;
}

}  // namespace

void Config::validate() const {
    if (cases == 0) throw Error(ErrorKind::usage, "--cases must be at least 1");
    // Under `all` the bounds are clamped per suite instead.
    if (suite == Suite::all || suite == Suite::matcher) return;
    const Bounds limit = default_bounds(suite);
    if (max_m > limit.m || max_n > limit.n) {
        throw Error(ErrorKind::usage, fmt::format("suite {} accepts m <= {} and n <= {}", to_string(suite), limit.m, limit.n));
    }
}

Targets Targets::production() {
    Targets t;
    t.matcher = [](const Sequence& s, const Sequence& v) { return enumerate_matches(s, v); };
    t.chainer = [](const MatchIndex& index, const Sequence& s, const Sequence& v) {
        return enumerate_candidates(index, s, v, ChainOptions::uncapped()).candidates;
    };
    t.nw = [](const Sequence& s, const Sequence& v, const ScoringScheme& scheme) {
        return needleman_wunsch(s, v, scheme);
    };
    t.sw = [](const Sequence& s, const Sequence& v, const ScoringScheme& scheme) {
        return smith_waterman(s, v, scheme);
    };
    return t;
}

Outcome run(const Config& config, const Targets& targets) {
    config.validate();
    Outcome outcome;
    std::vector<Suite> suites;
    if (config.suite == Suite::all) {
        suites = {Suite::matcher, Suite::chainer, Suite::nw, Suite::sw};
    } else {
        suites = {config.suite};
    }
    for (Suite suite : suites) {
        Config effective = config;
        if (config.suite == Suite::all) {
            // Explicit bounds apply to every suite only within each oracle's limits.
            const Bounds d = default_bounds(suite);
            effective.max_m = config.max_m > 0 ? std::min(config.max_m, d.m) : 0;
            effective.max_n = config.max_n > 0 ? std::min(config.max_n, d.n) : 0;
        }
        outcome.failure = run_suite(suite, effective, targets, outcome.cases_run);
        if (outcome.failure) break;
    }
    return outcome;
}

std::string describe(const Outcome& outcome, const Config& config) {
    if (!outcome.failure) {
        return fmt::format("verify: {} cases agree with the oracles (suite {}, seed {})\n", outcome.cases_run,
                           to_string(config.suite), config.seed);
    }
    const Counterexample& c = *outcome.failure;
    return fmt::format("verify: COUNTEREXAMPLE suite={} seed={} case={}\n  S={}\n  V={}\n  {}\n", to_string(c.suite),
                       c.seed, c.case_index, c.s, c.v, c.detail);
}

}  // namespace gapalign::verify
