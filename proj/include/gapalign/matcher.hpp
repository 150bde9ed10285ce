#pragma once

// Shrinking-window substring matcher.
//
// For every window length j from n down to min_window, every length-j
// substring of V is compared against every length-j substring of S and each
// equal pair is recorded as a MatchBlock.

#include <cstddef>
#include <map>
#include <vector>

#include "gapalign/core.hpp"

namespace gapalign {

struct MatchOptions {
    /// Smallest window scanned. 1 reproduces the full descent.
    std::size_t min_window = 1;
    /// Stop descending once the blocks found so far admit a full-coverage chain.
    bool early_stop = false;

    friend bool operator==(const MatchOptions&, const MatchOptions&) = default;
};

struct MatchIndex {
    /// Window length -> blocks of that length, ordered by (v_start, s_start).
    std::map<std::size_t, std::vector<MatchBlock>> by_size;
    ComparisonCounters counters;
    std::size_t m = 0;
    std::size_t n = 0;
    /// Smallest window actually scanned (larger than min_window after an early stop).
    std::size_t last_window = 0;

    std::size_t block_count() const;
    /// Every stored block, longest windows first.
    std::vector<MatchBlock> all_blocks() const;
};

/// Requires 1 <= n <= m. Throws empty_input for an empty V and order_violation
/// when V is longer than S.
MatchIndex enumerate_matches(const Sequence& s, const Sequence& v, const MatchOptions& options = {});

/// Closed-form counters for a full descent from n to min_window:
///   substring_comparisons       = sum_{j} (n - j + 1)(m - j + 1)
///   char_comparisons_worst_case = sum_{j} (n - j + 1)(m - j + 1) j
///   paper_formula_value         = sum_{j} (m - j) j
/// char_comparisons is left at zero; it depends on the data.
ComparisonCounters count_comparisons(std::size_t m, std::size_t n, std::size_t min_window = 1);

/// True when some ordered, non-overlapping chain of the stored blocks covers all of V.
bool admits_full_cover(const MatchIndex& index);

}  // namespace gapalign
