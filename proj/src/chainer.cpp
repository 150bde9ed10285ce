#include "gapalign/chainer.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

namespace gapalign {

void ChainOptions::validate() const {
    if (max_candidates == 0) throw Error(ErrorKind::usage, "max_candidates must be at least 1");
    if (beam_width == 0) throw Error(ErrorKind::usage, "beam_width must be at least 1");
    if (policy.tolerance < 0.0) throw Error(ErrorKind::usage, "selection tolerance must be >= 0");
}

ChainOptions ChainOptions::uncapped() {
    ChainOptions options;
    options.max_candidates = unlimited;
    options.beam_width = unlimited;
    return options;
}

std::string_view to_string(ChainOutcome outcome) {
    return outcome == ChainOutcome::complete ? "complete" : "no_full_cover";
}

namespace {

struct PartialChain {
    std::vector<MatchBlock> blocks;
    std::size_t v_end = 0;
    std::size_t s_end = 0;
    std::size_t coverage = 0;
    std::uint64_t gap_total = 0;
    std::uint64_t run_count = 0;
    std::uint64_t run_sq = 0;

    double variance() const {
        if (run_count == 0) return 0.0;
        const auto k = static_cast<unsigned __int128>(run_count);
        const auto t = static_cast<unsigned __int128>(gap_total);
        return static_cast<double>(k * run_sq - t * t) / static_cast<double>(k * k);
    }

    PartialChain extended(const MatchBlock& b) const {
        PartialChain next = *this;
        if (!blocks.empty() && b.s_start > s_end) {
            const std::uint64_t gap = b.s_start - s_end;
            next.gap_total += gap;
            next.run_count += 1;
            next.run_sq += gap * gap;
        }
        next.blocks.push_back(b);
        next.v_end = b.v_end();
        next.s_end = b.s_end();
        next.coverage += b.length;
        return next;
    }
};

class BeamRanking {
public:
    explicit BeamRanking(bool prefer_larger_blocks) : prefer_larger_(prefer_larger_blocks) {}

    bool operator()(const PartialChain& a, const PartialChain& b) const {
        if (a.coverage != b.coverage) return a.coverage > b.coverage;
        if (a.gap_total != b.gap_total) return a.gap_total < b.gap_total;
        const double va = a.variance();
        const double vb = b.variance();
        if (va != vb) return va < vb;
        if (prefer_larger_ && a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
        return a.blocks < b.blocks;
    }

private:
    bool prefer_larger_;
};

void prune(std::vector<PartialChain>& frontier, std::size_t beam_width, const BeamRanking& ranking) {
    if (frontier.size() <= beam_width) return;
    std::partial_sort(frontier.begin(), frontier.begin() + static_cast<std::ptrdiff_t>(beam_width), frontier.end(),
                      ranking);
    frontier.resize(beam_width);
}

// Blocks grouped by v_start in enumeration order: longest first (or shortest
// first without prefer_larger_blocks), then by s_start.
std::vector<std::vector<MatchBlock>> group_by_v_start(const MatchIndex& index, bool prefer_larger) {
    std::vector<std::vector<MatchBlock>> groups(index.n);
    for (const auto& [size, blocks] : index.by_size) {
        for (const MatchBlock& b : blocks) groups[b.v_start].push_back(b);
    }
    for (auto& g : groups) {
        std::sort(g.begin(), g.end(), [prefer_larger](const MatchBlock& a, const MatchBlock& b) {
            if (a.length != b.length) return prefer_larger ? a.length > b.length : a.length < b.length;
            return a.s_start < b.s_start;
        });
    }
    return groups;
}

std::vector<PartialChain> full_coverage_chains(const std::vector<std::vector<MatchBlock>>& groups, std::size_t n,
                                               std::size_t beam_width, const BeamRanking& ranking) {
    std::vector<std::vector<PartialChain>> frontiers(n + 1);
    frontiers[0].emplace_back();
    for (std::size_t k = 0; k < n; ++k) {
        auto& frontier = frontiers[k];
        prune(frontier, beam_width, ranking);
        for (const PartialChain& chain : frontier) {
            for (const MatchBlock& b : groups[k]) {
                // V is contiguous here, so S must leave a gap or the pair would merge.
                if (!chain.blocks.empty() && b.s_start <= chain.s_end) continue;
                frontiers[b.v_end()].push_back(chain.extended(b));
            }
        }
        std::vector<PartialChain>().swap(frontier);
    }
    return std::move(frontiers[n]);
}

std::vector<PartialChain> max_coverage_chains(const std::vector<std::vector<MatchBlock>>& groups, std::size_t n,
                                              std::size_t beam_width, const BeamRanking& ranking) {
    std::vector<std::vector<PartialChain>> frontiers(n + 1);
    frontiers[0].emplace_back();
    std::vector<PartialChain> best;
    std::size_t best_coverage = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        auto& frontier = frontiers[k];
        prune(frontier, beam_width, ranking);
        for (const PartialChain& chain : frontier) {
            if (chain.coverage > best_coverage) {
                best.clear();
                best_coverage = chain.coverage;
            }
            if (chain.coverage == best_coverage) best.push_back(chain);
            for (std::size_t start = k; start < n; ++start) {
                for (const MatchBlock& b : groups[start]) {
                    if (b.s_start < chain.s_end) continue;
                    if (!chain.blocks.empty() && b.v_start == chain.v_end && b.s_start == chain.s_end) continue;
                    frontiers[b.v_end()].push_back(chain.extended(b));
                }
            }
        }
        std::vector<PartialChain>().swap(frontier);
    }
    return best;
}

std::vector<CandidateAlignment> order_by_policy(std::vector<PartialChain> chains, std::size_t m,
                                                const SelectionPolicy& policy, std::size_t cap, bool& truncated) {
    std::vector<ScoredCandidate> scored;
    scored.reserve(chains.size());
    for (PartialChain& c : chains) scored.push_back(score_candidate(CandidateAlignment(std::move(c.blocks)), m));
    std::sort(scored.begin(), scored.end(), [&policy](const ScoredCandidate& a, const ScoredCandidate& b) {
        return ranks_before(a, b, policy.mode);
    });
    truncated = scored.size() > cap;
    if (truncated) scored.resize(cap);
    std::vector<CandidateAlignment> out;
    out.reserve(scored.size());
    for (ScoredCandidate& sc : scored) out.push_back(std::move(sc.chain));
    return out;
}

}  // namespace

ChainResult enumerate_candidates(const MatchIndex& index, const Sequence& s, const Sequence& v,
                                 const ChainOptions& options) {
    options.validate();
    if (index.m != s.length() || index.n != v.length()) {
        throw Error(ErrorKind::structural_violation,
                    fmt::format("index was built for m={}, n={} but got m={}, n={}", index.m, index.n, s.length(),
                                v.length()));
    }
    const BeamRanking ranking(options.prefer_larger_blocks);
    const auto groups = group_by_v_start(index, options.prefer_larger_blocks);

    ChainResult result;
    result.effective_beam_width = options.beam_width;

    if (!options.require_full_coverage) {
        auto chains = max_coverage_chains(groups, index.n, options.beam_width, ranking);
        const bool full = !chains.empty() && chains.front().coverage == index.n;
        result.outcome = full ? ChainOutcome::complete : ChainOutcome::no_full_cover;
        result.candidates = order_by_policy(std::move(chains), index.m, options.policy, options.max_candidates,
                                            result.truncated);
        return result;
    }

    if (!admits_full_cover(index)) {
        result.outcome = ChainOutcome::no_full_cover;
        bool ignored = false;
        result.partial = order_by_policy(max_coverage_chains(groups, index.n, options.beam_width, ranking), index.m,
                                         options.policy, options.max_candidates, ignored);
        return result;
    }

    std::size_t beam = options.beam_width;
    while (true) {
        auto chains = full_coverage_chains(groups, index.n, beam, ranking);
        if (!chains.empty()) {
            result.effective_beam_width = beam;
            result.candidates =
                order_by_policy(std::move(chains), index.m, options.policy, options.max_candidates, result.truncated);
            return result;
        }
        // A full cover exists, so only pruning can have lost it.
        if (beam == ChainOptions::unlimited) {
            throw Error(ErrorKind::structural_violation, "index admits a full cover but no chain was found");
        }
        beam = beam > ChainOptions::unlimited / 2 ? ChainOptions::unlimited : beam * 2;
    }
}

OperandRoles swap_for_insertions(const Sequence& s, const Sequence& v) { return {v, s, true}; }

OperandRoles swap_for_insertions(const OperandRoles& roles) { return {roles.v, roles.s, !roles.swapped}; }

std::vector<SubstitutionSite> substitution_sites(const CandidateAlignment& chain, std::size_t m, std::size_t n) {
    std::vector<SubstitutionSite> sites;
    auto blocks = chain.blocks();
    if (blocks.empty()) {
        if (n > 0) sites.push_back({0, n, 0, std::min(n, m)});
        return sites;
    }
    const MatchBlock& first = blocks.front();
    if (first.v_start > 0) {
        const std::size_t placed = std::min(first.v_start, first.s_start);
        sites.push_back({0, first.v_start, first.s_start - placed, placed});
    }
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        const MatchBlock& prev = blocks[i - 1];
        const std::size_t span = blocks[i].v_start - prev.v_end();
        if (span == 0) continue;
        sites.push_back({prev.v_end(), span, prev.s_end(), std::min(span, blocks[i].s_start - prev.s_end())});
    }
    const MatchBlock& last = blocks.back();
    if (last.v_end() < n) {
        const std::size_t span = n - last.v_end();
        sites.push_back({last.v_end(), span, last.s_end(), std::min(span, m - last.s_end())});
    }
    return sites;
}

RenderedAlignment render(const CandidateAlignment& chain, const Sequence& s, const Sequence& v,
                         bool show_substitutions) {
    chain.validate_against(s, v);
    const std::size_t m = s.length();
    RenderedAlignment out{s.residues(), std::string(m, ' '), std::string(m, '-')};
    for (const MatchBlock& b : chain.blocks()) {
        for (std::size_t i = 0; i < b.length; ++i) {
            out.marks[b.s_start + i] = '|';
            out.fragment[b.s_start + i] = v[b.v_start + i];
        }
    }
    if (show_substitutions) {
        for (const SubstitutionSite& site : substitution_sites(chain, m, v.length())) {
            // A leading span is right-aligned, so its tail is what fits.
            const bool leading = !chain.empty() && site.v_start == 0 && chain.blocks().front().v_start > 0;
            const std::size_t first_v = leading ? site.v_start + site.v_length - site.placed : site.v_start;
            for (std::size_t i = 0; i < site.placed; ++i) {
                out.fragment[site.s_column + i] =
                    static_cast<char>(std::tolower(static_cast<unsigned char>(v[first_v + i])));
            }
        }
    }
    return out;
}

}  // namespace gapalign
