#include "gapalign/baselines.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace gapalign {

namespace {

class ScoreMatrix {
public:
    ScoreMatrix(std::size_t rows, std::size_t cols) : cols_(cols), cells_(rows * cols, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

private:
    std::size_t cols_;
    std::vector<double> cells_;
};

void require_non_empty(const Sequence& s, const Sequence& v) {
    if (s.empty() || v.empty()) throw Error(ErrorKind::empty_input, "alignment needs two non-empty sequences");
}

// Walks back from (i, j) until `stop` holds, then reverses the rows.
template <typename Stop>
ScoredAlignment trace_back(const ScoreMatrix& h, const Sequence& s, const Sequence& v, const ScoringScheme& scheme,
                           std::size_t i, std::size_t j, Stop stop) {
    ScoredAlignment out;
    out.score = h(i, j);
    while (!stop(i, j)) {
        if (i > 0 && j > 0 && h(i, j) == h(i - 1, j - 1) + scheme.substitution(s[i - 1], v[j - 1])) {
            out.aligned_s.push_back(s[i - 1]);
            out.aligned_v.push_back(v[j - 1]);
            --i;
            --j;
        } else if (i > 0 && h(i, j) == h(i - 1, j) + scheme.gap) {
            out.aligned_s.push_back(s[i - 1]);
            out.aligned_v.push_back(gap_symbol);
            --i;
        } else {
            out.aligned_s.push_back(gap_symbol);
            out.aligned_v.push_back(v[j - 1]);
            --j;
        }
    }
    std::reverse(out.aligned_s.begin(), out.aligned_s.end());
    std::reverse(out.aligned_v.begin(), out.aligned_v.end());
    out.s_start = i;
    out.v_start = j;
    out.match_mask.resize(out.aligned_s.size());
    for (std::size_t c = 0; c < out.aligned_s.size(); ++c) {
        out.match_mask[c] = out.aligned_s[c] != gap_symbol && out.aligned_s[c] == out.aligned_v[c];
    }
    return out;
}

}  // namespace

ScoredAlignment needleman_wunsch(const Sequence& s, const Sequence& v, const ScoringScheme& scheme) {
    require_non_empty(s, v);
    scheme.validate();
    const std::size_t m = s.length();
    const std::size_t n = v.length();
    ScoreMatrix h(m + 1, n + 1);
    for (std::size_t i = 1; i <= m; ++i) h(i, 0) = h(i - 1, 0) + scheme.gap;
    for (std::size_t j = 1; j <= n; ++j) h(0, j) = h(0, j - 1) + scheme.gap;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            h(i, j) = std::max({h(i - 1, j - 1) + scheme.substitution(s[i - 1], v[j - 1]), h(i - 1, j) + scheme.gap,
                                h(i, j - 1) + scheme.gap});
        }
    }
    return trace_back(h, s, v, scheme, m, n, [](std::size_t i, std::size_t j) { return i == 0 && j == 0; });
}

ScoredAlignment smith_waterman(const Sequence& s, const Sequence& v, const ScoringScheme& scheme) {
    require_non_empty(s, v);
    scheme.validate();
    const std::size_t m = s.length();
    const std::size_t n = v.length();
    ScoreMatrix h(m + 1, n + 1);
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            h(i, j) = std::max({0.0, h(i - 1, j - 1) + scheme.substitution(s[i - 1], v[j - 1]),
                                h(i - 1, j) + scheme.gap, h(i, j - 1) + scheme.gap});
            if (h(i, j) > h(best_i, best_j)) {
                best_i = i;
                best_j = j;
            }
        }
    }
    auto out = trace_back(h, s, v, scheme, best_i, best_j,
                          [&h](std::size_t i, std::size_t j) { return h(i, j) == 0.0; });
    return out;
}

double column_score(const ScoredAlignment& alignment, const ScoringScheme& scheme) {
    if (alignment.aligned_s.size() != alignment.aligned_v.size()) {
        throw Error(ErrorKind::structural_violation, "aligned rows differ in length");
    }
    double total = 0.0;
    for (std::size_t c = 0; c < alignment.aligned_s.size(); ++c) {
        const char a = alignment.aligned_s[c];
        const char b = alignment.aligned_v[c];
        if (a == gap_symbol && b == gap_symbol) {
            throw Error(ErrorKind::structural_violation, fmt::format("column {} is a gap in both rows", c));
        }
        total += (a == gap_symbol || b == gap_symbol) ? scheme.gap : scheme.substitution(a, b);
    }
    return total;
}

}  // namespace gapalign
