#pragma once

// Gap-run statistics and candidate selection.
//
// A gap run is a maximal stretch of unmatched S positions strictly between
// the first and last matched S positions of a chain. Leading and trailing
// unmatched stretches are not runs. Variance is the population variance.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "gapalign/core.hpp"

namespace gapalign {

enum class SelectionMode { mean_then_variance, variance_only, mean_only };

std::string_view to_string(SelectionMode mode);
/// Accepts the canonical names plus the CLI spellings "mean", "variance", "mean-only".
SelectionMode selection_mode_from_string(std::string_view text);

struct SelectionPolicy {
    SelectionMode mode = SelectionMode::mean_then_variance;
    /// Two statistics closer than this are treated as equal.
    double tolerance = 1e-9;

    friend bool operator==(const SelectionPolicy&, const SelectionPolicy&) = default;
};

struct ScoredCandidate {
    CandidateAlignment chain;
    GapStatistics stats;

    friend bool operator==(const ScoredCandidate&, const ScoredCandidate&) = default;
};

/// Throws empty_chain for an empty chain, structural_violation if a block exceeds m.
std::vector<std::size_t> gap_runs(const CandidateAlignment& chain, std::size_t m);

GapStatistics statistics(std::span<const std::size_t> runs);

/// gap_runs followed by statistics.
ScoredCandidate score_candidate(const CandidateAlignment& chain, std::size_t m);

/// Index of the policy-optimal candidate. Ties left after the statistics are
/// broken by lexicographic chain order, then by position. Throws empty_input
/// on an empty list.
std::size_t select(std::span<const ScoredCandidate> candidates, const SelectionPolicy& policy);

/// Strict weak ordering by the policy's statistics (exact comparison), then by chain.
bool ranks_before(const ScoredCandidate& a, const ScoredCandidate& b, SelectionMode mode);

}  // namespace gapalign
