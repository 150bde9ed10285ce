#pragma once

// Builds candidate alignments from a MatchIndex.
//
// A candidate is a chain of match blocks that is strictly ordered and
// non-overlapping in both S and V. In the default mode every candidate covers
// all of V, so gaps in S are deletions. Chains are produced once each in
// canonical form: a block may never start exactly where its predecessor ends
// in both sequences, since that pair is already represented by a longer block.
//
// Search runs frontier by frontier, keyed by the next uncovered V position.
// Before a frontier is expanded it is cut to beam_width chains ranked by
// (coverage desc, interior gap total, gap variance, block count when
// prefer_larger_blocks, block coordinates).

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "gapalign/core.hpp"
#include "gapalign/gapstats.hpp"
#include "gapalign/matcher.hpp"

namespace gapalign {

struct ChainOptions {
    std::size_t max_candidates = 1024;
    std::size_t beam_width = 256;
    bool require_full_coverage = true;
    bool prefer_larger_blocks = true;
    /// Order of the emitted list; the first entry is the policy's choice up to tolerance.
    SelectionPolicy policy{};

    /// Throws usage if a cap is zero.
    void validate() const;

    static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();
    /// Both caps disabled.
    static ChainOptions uncapped();

    friend bool operator==(const ChainOptions&, const ChainOptions&) = default;
};

enum class ChainOutcome { complete, no_full_cover };

std::string_view to_string(ChainOutcome outcome);

struct ChainResult {
    ChainOutcome outcome = ChainOutcome::complete;
    /// Canonical, deduplicated chains in policy order. Full coverage when required.
    std::vector<CandidateAlignment> candidates;
    /// For no_full_cover: the maximum-coverage chains, in policy order.
    std::vector<CandidateAlignment> partial;
    /// True when max_candidates cut the list.
    bool truncated = false;
    /// Beam width that produced the result; doubled from the option when a
    /// narrower beam lost every full-coverage chain.
    std::size_t effective_beam_width = 0;
};

ChainResult enumerate_candidates(const MatchIndex& index, const Sequence& s, const Sequence& v,
                                 const ChainOptions& options = {});

/// Operand roles after an optional swap. With swapped set, V plays the
/// reference and gaps in the fragment row denote insertions relative to the
/// original S.
struct OperandRoles {
    Sequence s;
    Sequence v;
    bool swapped = false;
};

OperandRoles swap_for_insertions(const Sequence& s, const Sequence& v);
/// Swaps again and toggles the flag, so applying it twice restores the input.
OperandRoles swap_for_insertions(const OperandRoles& roles);

/// An unmatched V span placed into an S gap. Spans between blocks and after the
/// last block are left-aligned in the following gap; a span before the first
/// block is right-aligned against it. `placed` is short of v_length when the
/// gap is too narrow.
struct SubstitutionSite {
    std::size_t v_start = 0;
    std::size_t v_length = 0;
    std::size_t s_column = 0;
    std::size_t placed = 0;

    friend bool operator==(const SubstitutionSite&, const SubstitutionSite&) = default;
};

std::vector<SubstitutionSite> substitution_sites(const CandidateAlignment& chain, std::size_t m, std::size_t n);

struct RenderedAlignment {
    /// S verbatim.
    std::string reference;
    /// '|' under every matched S position, ' ' elsewhere.
    std::string marks;
    /// Matched V symbols at their S positions, '-' elsewhere. Always m long.
    std::string fragment;

    std::string str() const { return reference + '\n' + marks + '\n' + fragment + '\n'; }

    friend bool operator==(const RenderedAlignment&, const RenderedAlignment&) = default;
};

/// Validates the chain against (S, V) first. With show_substitutions the
/// placed substitution symbols appear in lowercase in the fragment row.
RenderedAlignment render(const CandidateAlignment& chain, const Sequence& s, const Sequence& v,
                         bool show_substitutions = false);

}  // namespace gapalign
