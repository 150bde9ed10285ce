#include "gapalign/oracle.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <fmt/format.h>

namespace gapalign::oracle {

std::vector<MatchBlock> naive_match_scan(const Sequence& s, const Sequence& v, std::size_t j) {
    std::vector<MatchBlock> out;
    if (j == 0) return out;
    const std::string& sr = s.residues();
    const std::string& vr = v.residues();
    for (std::size_t v_off = 0; v_off + j <= vr.size(); ++v_off) {
        for (std::size_t s_off = 0; s_off + j <= sr.size(); ++s_off) {
            bool equal = true;
            for (std::size_t i = 0; i < j; ++i) {
                if (vr[v_off + i] != sr[s_off + i]) equal = false;
            }
            if (equal) out.push_back({v_off, s_off, j});
        }
    }
    return out;
}

namespace {

using Coords = std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>;

Coords merge_contiguous(const std::vector<MatchBlock>& path) {
    Coords merged;
    for (const MatchBlock& b : path) {
        if (!merged.empty()) {
            auto& [pv, ps, pl] = merged.back();
            if (pv + pl == b.v_start && ps + pl == b.s_start) {
                pl += b.length;
                continue;
            }
        }
        merged.emplace_back(b.v_start, b.s_start, b.length);
    }
    return merged;
}

void extend_paths(const std::vector<MatchBlock>& blocks, std::size_t n, std::vector<MatchBlock>& path,
                  std::set<Coords>& found) {
    const std::size_t covered = path.empty() ? 0 : path.back().v_start + path.back().length;
    const std::size_t s_floor = path.empty() ? 0 : path.back().s_start + path.back().length;
    if (covered == n) {
        found.insert(merge_contiguous(path));
        return;
    }
    for (const MatchBlock& b : blocks) {
        if (b.v_start != covered || b.s_start < s_floor) continue;
        path.push_back(b);
        extend_paths(blocks, n, path, found);
        path.pop_back();
    }
}

double best_global_from(const std::string& s, const std::string& v, std::size_t i, std::size_t j,
                        const ScoringScheme& scheme) {
    if (i == s.size() && j == v.size()) return 0.0;
    double best = -1e300;
    if (i < s.size() && j < v.size()) {
        const double pair = s[i] == v[j] ? scheme.match : scheme.mismatch;
        best = std::max(best, pair + best_global_from(s, v, i + 1, j + 1, scheme));
    }
    if (i < s.size()) best = std::max(best, scheme.gap + best_global_from(s, v, i + 1, j, scheme));
    if (j < v.size()) best = std::max(best, scheme.gap + best_global_from(s, v, i, j + 1, scheme));
    return best;
}

// Every path from a fixed start is an alignment of some substring pair that
// begins there; the best accumulated score over all visited nodes is the
// best over all end points.
void best_local_from(const std::string& s, const std::string& v, std::size_t i, std::size_t j, double acc,
                     const ScoringScheme& scheme, double& best) {
    best = std::max(best, acc);
    if (i < s.size() && j < v.size()) {
        best_local_from(s, v, i + 1, j + 1, acc + (s[i] == v[j] ? scheme.match : scheme.mismatch), scheme, best);
    }
    if (i < s.size()) best_local_from(s, v, i + 1, j, acc + scheme.gap, scheme, best);
    if (j < v.size()) best_local_from(s, v, i, j + 1, acc + scheme.gap, scheme, best);
}

void check_score_size(const Sequence& s, const Sequence& v) {
    if (s.length() > max_score_length || v.length() > max_score_length) {
        throw Error(ErrorKind::size_limit, fmt::format("exhaustive score oracles accept lengths up to {} (got {} and {})",
                                                       max_score_length, s.length(), v.length()));
    }
}

}  // namespace

std::vector<CandidateAlignment> exhaustive_chains(const MatchIndex& index, std::size_t n) {
    std::vector<MatchBlock> blocks;
    for (const auto& [size, list] : index.by_size) blocks.insert(blocks.end(), list.begin(), list.end());
    if (blocks.size() > max_chain_blocks) {
        throw Error(ErrorKind::size_limit, fmt::format("exhaustive chain search accepts up to {} blocks (got {})",
                                                       max_chain_blocks, blocks.size()));
    }
    std::set<Coords> found;
    if (n > 0) {
        std::vector<MatchBlock> path;
        extend_paths(blocks, n, path, found);
    }
    std::vector<CandidateAlignment> out;
    out.reserve(found.size());
    for (const Coords& coords : found) {
        std::vector<MatchBlock> chain;
        for (const auto& [vs, ss, len] : coords) chain.push_back({vs, ss, len});
        out.emplace_back(std::move(chain));
    }
    return out;
}

double exhaustive_global_score(const Sequence& s, const Sequence& v, const ScoringScheme& scheme) {
    check_score_size(s, v);
    return best_global_from(s.residues(), v.residues(), 0, 0, scheme);
}

double exhaustive_local_score(const Sequence& s, const Sequence& v, const ScoringScheme& scheme) {
    check_score_size(s, v);
    double best = 0.0;
    for (std::size_t i = 0; i <= s.length(); ++i) {
        for (std::size_t j = 0; j <= v.length(); ++j) best_local_from(s.residues(), v.residues(), i, j, 0.0, scheme, best);
    }
    return best;
}

}  // namespace gapalign::oracle
