#include "gapalign/gapstats.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

namespace gapalign {

std::string_view to_string(SelectionMode mode) {
    switch (mode) {
    case SelectionMode::mean_then_variance: return "mean_then_variance";
    case SelectionMode::variance_only: return "variance_only";
    case SelectionMode::mean_only: return "mean_only";
    }
    return "unknown";
}

SelectionMode selection_mode_from_string(std::string_view text) {
    if (text == "mean_then_variance" || text == "mean") return SelectionMode::mean_then_variance;
    if (text == "variance_only" || text == "variance") return SelectionMode::variance_only;
    if (text == "mean_only" || text == "mean-only") return SelectionMode::mean_only;
    throw Error(ErrorKind::usage, fmt::format("unknown selection policy '{}'", text));
}

std::vector<std::size_t> gap_runs(const CandidateAlignment& chain, std::size_t m) {
    if (chain.empty()) throw Error(ErrorKind::empty_chain, "gap runs of an empty chain are undefined");
    auto blocks = chain.blocks();
    if (blocks.back().s_end() > m) {
        throw Error(ErrorKind::structural_violation,
                    fmt::format("chain ends at S position {} beyond m={}", blocks.back().s_end(), m));
    }
    std::vector<std::size_t> runs;
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        const std::size_t gap = blocks[i].s_start - blocks[i - 1].s_end();
        if (gap > 0) runs.push_back(gap);
    }
    return runs;
}

GapStatistics statistics(std::span<const std::size_t> runs) {
    GapStatistics stats;
    stats.runs.assign(runs.begin(), runs.end());
    if (runs.empty()) return stats;
    // Exact integer moments, so equal rationals always give identical doubles.
    unsigned __int128 sum = 0;
    unsigned __int128 sum_sq = 0;
    for (std::size_t r : runs) {
        sum += r;
        sum_sq += static_cast<unsigned __int128>(r) * r;
    }
    const unsigned __int128 k = runs.size();
    stats.mean = static_cast<double>(sum) / static_cast<double>(k);
    stats.variance = static_cast<double>(k * sum_sq - sum * sum) / static_cast<double>(k * k);
    return stats;
}

ScoredCandidate score_candidate(const CandidateAlignment& chain, std::size_t m) {
    auto runs = gap_runs(chain, m);
    return {chain, statistics(runs)};
}

namespace {

template <typename Key>
std::vector<std::size_t> near_minimum(std::span<const ScoredCandidate> candidates,
                                      const std::vector<std::size_t>& pool, Key key, double tolerance) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i : pool) best = std::min(best, key(candidates[i].stats));
    std::vector<std::size_t> kept;
    for (std::size_t i : pool) {
        if (key(candidates[i].stats) <= best + tolerance) kept.push_back(i);
    }
    return kept;
}

double mean_of(const GapStatistics& s) { return s.mean; }
double variance_of(const GapStatistics& s) { return s.variance; }

}  // namespace

std::size_t select(std::span<const ScoredCandidate> candidates, const SelectionPolicy& policy) {
    if (candidates.empty()) throw Error(ErrorKind::empty_input, "no candidates to select from");
    if (policy.tolerance < 0.0) throw Error(ErrorKind::usage, "selection tolerance must be >= 0");

    std::vector<std::size_t> pool(candidates.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

    switch (policy.mode) {
    case SelectionMode::mean_then_variance:
        pool = near_minimum(candidates, pool, mean_of, policy.tolerance);
        pool = near_minimum(candidates, pool, variance_of, policy.tolerance);
        break;
    case SelectionMode::variance_only:
        pool = near_minimum(candidates, pool, variance_of, policy.tolerance);
        pool = near_minimum(candidates, pool, mean_of, policy.tolerance);
        break;
    case SelectionMode::mean_only:
        pool = near_minimum(candidates, pool, mean_of, policy.tolerance);
        break;
    }
    return *std::min_element(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
        if (candidates[a].chain != candidates[b].chain) return candidates[a].chain < candidates[b].chain;
        return a < b;
    });
}

bool ranks_before(const ScoredCandidate& a, const ScoredCandidate& b, SelectionMode mode) {
    const GapStatistics& x = a.stats;
    const GapStatistics& y = b.stats;
    switch (mode) {
    case SelectionMode::mean_then_variance:
        if (x.mean != y.mean) return x.mean < y.mean;
        if (x.variance != y.variance) return x.variance < y.variance;
        break;
    case SelectionMode::variance_only:
        if (x.variance != y.variance) return x.variance < y.variance;
        if (x.mean != y.mean) return x.mean < y.mean;
        break;
    case SelectionMode::mean_only:
        if (x.mean != y.mean) return x.mean < y.mean;
        break;
    }
    return a.chain < b.chain;
}

}  // namespace gapalign
