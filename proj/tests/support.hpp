#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gapalign/core.hpp"

namespace gapalign::testing {

// Worked DNA example: reference of length 32, fragment of length 9.
inline constexpr std::string_view dna_s = "AGTCTAACTAGAATATACCGTACAGTACGAAG";
inline constexpr std::string_view dna_v = "TACTAGGAG";

// Four reference placements of V. As dash rows, 1 and 3 parse against S in
// their original spacing; rows 2 and 4 are short and do not. For those two the
// placement is the one whose gap runs give the expected statistics.
inline CandidateAlignment dna_placement1() { return CandidateAlignment({{0, 2, 1}, {1, 6, 5}, {6, 19, 1}, {7, 23, 2}}); }
inline CandidateAlignment dna_placement2() { return CandidateAlignment({{0, 4, 1}, {1, 6, 5}, {6, 19, 1}, {7, 30, 2}}); }
inline CandidateAlignment dna_placement3() {
    return CandidateAlignment({{0, 4, 1}, {1, 6, 5}, {6, 19, 1}, {7, 21, 1}, {8, 24, 1}});
}
inline CandidateAlignment dna_placement4() {
    return CandidateAlignment({{0, 4, 1}, {1, 6, 5}, {6, 19, 1}, {7, 26, 1}, {8, 28, 1}});
}
inline std::vector<CandidateAlignment> dna_placements() {
    return {dna_placement1(), dna_placement2(), dna_placement3(), dna_placement4()};
}

inline Sequence seq(std::string_view residues, std::string id = "x") {
    return Sequence(std::move(id), std::string(residues));
}

inline std::string random_string(std::mt19937_64& rng, std::size_t length, std::string_view alphabet) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string out(length, ' ');
    for (char& c : out) c = alphabet[pick(rng)];
    return out;
}

inline std::size_t random_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// A random strictly increasing embedding of V into a freshly generated S,
/// returned as (S, V, canonical chain of unit blocks).
struct RandomEmbedding {
    std::string s;
    std::string v;
    CandidateAlignment chain;
};

inline RandomEmbedding random_embedding(std::mt19937_64& rng, std::size_t m, std::size_t n, std::string_view alphabet) {
    RandomEmbedding out;
    out.s = random_string(rng, m, alphabet);
    std::vector<std::size_t> positions(m);
    for (std::size_t i = 0; i < m; ++i) positions[i] = i;
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(n);
    std::sort(positions.begin(), positions.end());
    std::vector<MatchBlock> blocks;
    for (std::size_t i = 0; i < n; ++i) {
        out.v.push_back(out.s[positions[i]]);
        blocks.push_back({i, positions[i], 1});
    }
    out.chain = canonicalize(CandidateAlignment(std::move(blocks)));
    return out;
}

/// Like random_embedding, but each V position is replaced by 'Z' (absent from
/// the alphabet) with the given probability and left out of the chain. The
/// replaced spans always fit their S gaps, so the substitution rendering is
/// exact. At least one position stays matched.
inline RandomEmbedding random_partial(std::mt19937_64& rng, std::size_t m, std::size_t n, std::string_view alphabet,
                                      double replace_probability) {
    RandomEmbedding out = random_embedding(rng, m, n, alphabet);
    std::bernoulli_distribution replace(replace_probability);
    std::vector<bool> kept(n, true);
    for (std::size_t i = 0; i < n; ++i) kept[i] = !replace(rng);
    kept[random_between(rng, 0, n - 1)] = true;
    std::vector<MatchBlock> blocks;
    for (const MatchBlock& b : out.chain.blocks()) {
        for (std::size_t i = 0; i < b.length; ++i) {
            if (kept[b.v_start + i]) {
                blocks.push_back({b.v_start + i, b.s_start + i, 1});
            } else {
                out.v[b.v_start + i] = 'Z';
            }
        }
    }
    out.chain = canonicalize(CandidateAlignment(std::move(blocks)));
    return out;
}

}  // namespace gapalign::testing
