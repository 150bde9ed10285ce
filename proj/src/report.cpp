#include "gapalign/report.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace gapalign {

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::proposed: return "proposed";
    case Algorithm::nw: return "nw";
    case Algorithm::sw: return "sw";
    }
    return "unknown";
}

Algorithm algorithm_from_string(std::string_view text) {
    if (text == "proposed") return Algorithm::proposed;
    if (text == "nw") return Algorithm::nw;
    if (text == "sw") return Algorithm::sw;
    throw Error(ErrorKind::usage, fmt::format("unknown algorithm '{}' (expected proposed, nw or sw)", text));
}

namespace {

std::vector<ScoredCandidate> score_all(const std::vector<CandidateAlignment>& chains, std::size_t m) {
    std::vector<ScoredCandidate> out;
    out.reserve(chains.size());
    for (const CandidateAlignment& c : chains) out.push_back(score_candidate(c, m));
    return out;
}

}  // namespace

AlignmentReport align(const Sequence& s, const Sequence& v, const AlignOptions& options) {
    AlignmentReport report;
    report.algorithm = options.algorithm;
    report.match_options = options.match;
    report.chain_options = options.chain;
    report.scheme = options.scheme;
    if (options.swap) {
        OperandRoles roles = swap_for_insertions(s, v);
        report.s = std::move(roles.s);
        report.v = std::move(roles.v);
        report.swapped = roles.swapped;
    } else {
        report.s = s;
        report.v = v;
    }

    if (options.algorithm == Algorithm::nw || options.algorithm == Algorithm::sw) {
        report.scored = options.algorithm == Algorithm::nw ? needleman_wunsch(report.s, report.v, options.scheme)
                                                           : smith_waterman(report.s, report.v, options.scheme);
        report.selected = 0;
        return report;
    }

    const MatchIndex index = enumerate_matches(report.s, report.v, options.match);
    report.counters = index.counters;
    ChainResult chains = enumerate_candidates(index, report.s, report.v, options.chain);
    report.outcome = chains.outcome;
    report.truncated = chains.truncated;
    report.effective_beam_width = chains.effective_beam_width;
    report.candidates = score_all(chains.candidates, report.s.length());
    report.partial = score_all(chains.partial, report.s.length());
    if (!report.candidates.empty()) report.selected = select(report.candidates, options.chain.policy);
    return report;
}

AlignmentReport restrict_candidates(AlignmentReport report, std::span<const CandidateAlignment> keep) {
    std::vector<ScoredCandidate> kept;
    for (const CandidateAlignment& wanted : keep) {
        const CandidateAlignment canonical = canonicalize(wanted);
        auto it = std::find_if(report.candidates.begin(), report.candidates.end(),
                               [&](const ScoredCandidate& c) { return c.chain == canonical; });
        if (it == report.candidates.end()) {
            throw Error(ErrorKind::usage, "a requested candidate is not among the enumerated alignments");
        }
        if (std::none_of(kept.begin(), kept.end(), [&](const ScoredCandidate& c) { return c.chain == canonical; })) {
            kept.push_back(*it);
        }
    }
    report.candidates = std::move(kept);
    report.truncated = false;
    report.selected.reset();
    if (!report.candidates.empty()) report.selected = select(report.candidates, report.chain_options.policy);
    return report;
}

}  // namespace gapalign
