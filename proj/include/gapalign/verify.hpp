#pragma once

// Randomised cross-checks of the production modules against the oracles.
//
// Case i of a run uses an RNG seeded from (seed, i), so a failing case can be
// replayed from the printed seed and index alone.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gapalign/baselines.hpp"
#include "gapalign/chainer.hpp"
#include "gapalign/matcher.hpp"

namespace gapalign::verify {

enum class Suite { matcher, chainer, nw, sw, all };

Suite suite_from_string(std::string_view text);
std::string_view to_string(Suite suite);

struct Config {
    Suite suite = Suite::all;
    std::uint64_t seed = 42;
    std::size_t cases = 100;
    /// Upper bounds on m and n; zero picks the per-suite default
    /// (matcher 20/10, chainer 12/6, nw and sw 8/8).
    std::size_t max_m = 0;
    std::size_t max_n = 0;

    /// Throws usage for zero cases or bounds beyond what the oracles accept.
    void validate() const;
};

/// The implementations under test. Defaults are the production functions;
/// tests substitute deliberately broken ones to exercise failure reporting.
struct Targets {
    std::function<MatchIndex(const Sequence&, const Sequence&)> matcher;
    std::function<std::vector<CandidateAlignment>(const MatchIndex&, const Sequence&, const Sequence&)> chainer;
    std::function<ScoredAlignment(const Sequence&, const Sequence&, const ScoringScheme&)> nw;
    std::function<ScoredAlignment(const Sequence&, const Sequence&, const ScoringScheme&)> sw;

    static Targets production();
};

struct Counterexample {
    Suite suite = Suite::all;
    std::uint64_t seed = 0;
    std::size_t case_index = 0;
    std::string s;
    std::string v;
    std::string detail;
};

struct Outcome {
    std::size_t cases_run = 0;
    std::optional<Counterexample> failure;
};

Outcome run(const Config& config, const Targets& targets = Targets::production());

std::string describe(const Outcome& outcome, const Config& config);

}  // namespace gapalign::verify
