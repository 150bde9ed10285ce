#pragma once

// Brute-force reference implementations. None of these call into the matcher,
// chainer or baselines; they only share the core data types, so agreement
// with the production code is independent evidence.

#include <cstddef>
#include <vector>

#include "gapalign/core.hpp"
#include "gapalign/matcher.hpp"

namespace gapalign::oracle {

/// Largest instance exhaustive_chains accepts (blocks in the index).
inline constexpr std::size_t max_chain_blocks = 256;
/// Largest sequence length the exhaustive score oracles accept.
inline constexpr std::size_t max_score_length = 8;

/// Every (v_off, s_off) whose length-j windows are equal, by a double loop.
std::vector<MatchBlock> naive_match_scan(const Sequence& s, const Sequence& v, std::size_t j);

/// Every canonical chain of index blocks that covers V[0, n), found by
/// unpruned depth-first search over block sequences and deduplicated after
/// merging. Throws size_limit above max_chain_blocks.
std::vector<CandidateAlignment> exhaustive_chains(const MatchIndex& index, std::size_t n);

/// Best global alignment score over all alignments, by plain three-way recursion.
double exhaustive_global_score(const Sequence& s, const Sequence& v, const ScoringScheme& scheme);

/// Best score over all alignments of all substring pairs, floored at 0.
double exhaustive_local_score(const Sequence& s, const Sequence& v, const ScoringScheme& scheme);

}  // namespace gapalign::oracle
