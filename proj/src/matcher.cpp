#include "gapalign/matcher.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

namespace gapalign {

std::size_t MatchIndex::block_count() const {
    std::size_t total = 0;
    for (const auto& [size, blocks] : by_size) total += blocks.size();
    return total;
}

std::vector<MatchBlock> MatchIndex::all_blocks() const {
    std::vector<MatchBlock> out;
    out.reserve(block_count());
    for (auto it = by_size.rbegin(); it != by_size.rend(); ++it) {
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return out;
}

MatchIndex enumerate_matches(const Sequence& s, const Sequence& v, const MatchOptions& options) {
    const std::size_t m = s.length();
    const std::size_t n = v.length();
    if (n == 0) throw Error(ErrorKind::empty_input, "fragment V is empty");
    if (n > m) {
        throw Error(ErrorKind::order_violation,
                    fmt::format("fragment V (n={}) is longer than S (m={}); swap the operands", n, m));
    }
    if (options.min_window == 0) throw Error(ErrorKind::usage, "min_window must be at least 1");

    MatchIndex index;
    index.m = m;
    index.n = n;
    const char* sp = s.residues().data();
    const char* vp = v.residues().data();

    for (std::size_t j = n; j >= options.min_window; --j) {
        std::vector<MatchBlock> found;
        ComparisonCounters& c = index.counters;
        c.paper_formula_value += (m - j) * j;
        for (std::size_t v_off = 0; v_off + j <= n; ++v_off) {
            for (std::size_t s_off = 0; s_off + j <= m; ++s_off) {
                ++c.substring_comparisons;
                c.char_comparisons_worst_case += j;
                std::size_t i = 0;
                while (i < j) {
                    ++c.char_comparisons;
                    if (vp[v_off + i] != sp[s_off + i]) break;
                    ++i;
                }
                if (i == j) found.push_back({v_off, s_off, j});
            }
        }
        index.last_window = j;
        if (!found.empty()) index.by_size.emplace(j, std::move(found));
        if (options.early_stop && admits_full_cover(index)) break;
        if (j == 1) break;
    }
    return index;
}

ComparisonCounters count_comparisons(std::size_t m, std::size_t n, std::size_t min_window) {
    ComparisonCounters c;
    for (std::size_t j = std::max<std::size_t>(min_window, 1); j <= n && j <= m; ++j) {
        const std::uint64_t pairs = static_cast<std::uint64_t>(n - j + 1) * (m - j + 1);
        c.substring_comparisons += pairs;
        c.char_comparisons_worst_case += pairs * j;
        c.paper_formula_value += static_cast<std::uint64_t>(m - j) * j;
    }
    return c;
}

bool admits_full_cover(const MatchIndex& index) {
    constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();
    // leftmost[k]: smallest S end over chains that cover V[0, k) exactly.
    std::vector<std::size_t> leftmost(index.n + 1, unreachable);
    leftmost[0] = 0;
    std::vector<std::vector<MatchBlock>> starting_at(index.n);
    for (const auto& [size, blocks] : index.by_size) {
        for (const MatchBlock& b : blocks) starting_at[b.v_start].push_back(b);
    }
    for (std::size_t k = 0; k < index.n; ++k) {
        if (leftmost[k] == unreachable) continue;
        for (const MatchBlock& b : starting_at[k]) {
            if (b.s_start >= leftmost[k]) leftmost[b.v_end()] = std::min(leftmost[b.v_end()], b.s_end());
        }
    }
    return leftmost[index.n] != unreachable;
}

}  // namespace gapalign
