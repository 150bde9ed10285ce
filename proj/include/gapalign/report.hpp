#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gapalign/baselines.hpp"
#include "gapalign/chainer.hpp"
#include "gapalign/core.hpp"
#include "gapalign/gapstats.hpp"
#include "gapalign/matcher.hpp"

namespace gapalign {

enum class Algorithm { proposed, nw, sw };

std::string_view to_string(Algorithm algorithm);
Algorithm algorithm_from_string(std::string_view text);

struct AlignOptions {
    Algorithm algorithm = Algorithm::proposed;
    MatchOptions match{};
    ChainOptions chain{};
    ScoringScheme scheme{};
    /// Swap S and V before aligning (insertion mode).
    bool swap = false;
};

struct AlignmentReport {
    Algorithm algorithm = Algorithm::proposed;
    /// Operands in the roles they were aligned in (after any swap).
    Sequence s;
    Sequence v;
    bool swapped = false;
    MatchOptions match_options{};
    ChainOptions chain_options{};
    ScoringScheme scheme{};
    ChainOutcome outcome = ChainOutcome::complete;
    bool truncated = false;
    std::size_t effective_beam_width = 0;
    /// Proposed: candidates in policy order. nw/sw: empty.
    std::vector<ScoredCandidate> candidates;
    /// Best partial-coverage chains when no full cover exists.
    std::vector<ScoredCandidate> partial;
    /// nw/sw result.
    std::optional<ScoredAlignment> scored;
    /// Index into candidates (proposed) or 0 for nw/sw; empty when nothing was found.
    std::optional<std::size_t> selected;
    ComparisonCounters counters{};

    friend bool operator==(const AlignmentReport&, const AlignmentReport&) = default;
};

/// Runs the configured algorithm end to end. For the proposed algorithm V must
/// not be longer than S after the optional swap (order_violation otherwise).
AlignmentReport align(const Sequence& s, const Sequence& v, const AlignOptions& options = {});

/// Keeps only the listed chains (compared canonically) and re-runs selection.
/// Throws usage if a listed chain was not among the report's candidates.
AlignmentReport restrict_candidates(AlignmentReport report, std::span<const CandidateAlignment> keep);

}  // namespace gapalign
