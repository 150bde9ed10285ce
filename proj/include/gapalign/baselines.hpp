#pragma once

// Needleman-Wunsch (global) and Smith-Waterman (local) aligners with linear
// gap costs. Reference baselines only.
//
// The DP matrix has S along rows and V along columns. Traceback ties are
// broken diagonal > up > left, where "up" consumes an S symbol against a gap
// in V and "left" consumes a V symbol against a gap in S. Smith-Waterman
// starts its traceback from the first maximal cell in row-major order.

#include <cstddef>
#include <string>
#include <vector>

#include "gapalign/core.hpp"

namespace gapalign {

inline constexpr char gap_symbol = '-';

struct ScoredAlignment {
    std::string aligned_s;
    std::string aligned_v;
    double score = 0.0;
    std::vector<bool> match_mask;
    /// Offsets of the aligned segments in S and V (zero for global alignments).
    std::size_t s_start = 0;
    std::size_t v_start = 0;

    friend bool operator==(const ScoredAlignment&, const ScoredAlignment&) = default;
};

ScoredAlignment needleman_wunsch(const Sequence& s, const Sequence& v, const ScoringScheme& scheme = {});
ScoredAlignment smith_waterman(const Sequence& s, const Sequence& v, const ScoringScheme& scheme = {});

/// Column-wise rescoring of an alignment. Throws structural_violation on
/// unequal row lengths or a column with gaps in both rows.
double column_score(const ScoredAlignment& alignment, const ScoringScheme& scheme);

}  // namespace gapalign
