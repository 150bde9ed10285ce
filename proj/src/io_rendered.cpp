#include <cctype>

#include <fmt/format.h>

#include "gapalign/io.hpp"

namespace gapalign {

namespace {

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }

// `marks` is null for a lone fragment row, where every uppercase symbol is a match.
CandidateAlignment parse_columns(const std::string* marks, std::string row, const Sequence& s, const Sequence& v) {
    const std::size_t m = s.length();
    const std::size_t n = v.length();
    if (row.size() > m) throw ParseError(0, m + 1, fmt::format("fragment row is longer than S (m={})", m));
    row.resize(m, '-');

    std::vector<MatchBlock> blocks;
    std::size_t next_v = 0;
    for (std::size_t c = 0; c < m; ++c) {
        const char ch = row[c];
        const bool marked = marks != nullptr && (*marks)[c] == '|';
        if (ch == '-') {
            if (marked) throw ParseError(0, c + 1, "'|' mark over a gap");
            continue;
        }
        if (!is_upper(ch) && !is_lower(ch)) throw ParseError(0, c + 1, fmt::format("unexpected character '{}'", ch));
        const char symbol = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (next_v >= n || v[next_v] != symbol) {
            throw ParseError(0, c + 1, fmt::format("symbol '{}' is out of order with respect to V", ch));
        }
        if (is_lower(ch)) {
            if (marked) throw ParseError(0, c + 1, "substitution placeholder carries a '|' mark");
            ++next_v;
            continue;
        }
        if (marks != nullptr && !marked) throw ParseError(0, c + 1, fmt::format("matched symbol '{}' lacks a '|' mark", ch));
        if (s[c] != symbol) {
            throw ParseError(0, c + 1, fmt::format("symbol '{}' does not match S symbol '{}'", ch, s[c]));
        }
        blocks.push_back({next_v, c, 1});
        ++next_v;
    }
    return canonicalize(CandidateAlignment(std::move(blocks)));
}

}  // namespace

CandidateAlignment parse_rendered(const RenderedAlignment& rendered, const Sequence& s, const Sequence& v) {
    if (rendered.reference != s.residues()) throw ParseError(1, 1, "reference line does not equal S");
    const std::size_t m = s.length();
    if (rendered.marks.size() > m) throw ParseError(2, m + 1, "mark line is longer than S");
    std::string marks = rendered.marks;
    marks.resize(m, ' ');
    for (std::size_t c = 0; c < m; ++c) {
        if (marks[c] != '|' && marks[c] != ' ') {
            throw ParseError(2, c + 1, fmt::format("unexpected mark character '{}'", marks[c]));
        }
    }
    return parse_columns(&marks, rendered.fragment, s, v);
}

CandidateAlignment parse_rendered(std::string_view block, const Sequence& s, const Sequence& v) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= block.size() && lines.size() < 4) {
        std::size_t eol = block.find('\n', pos);
        std::string line(block.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    while (!lines.empty() && lines.size() > 3 && lines.back().empty()) lines.pop_back();
    if (lines.size() != 3) throw ParseError(0, 0, fmt::format("expected 3 lines, got {}", lines.size()));
    return parse_rendered(RenderedAlignment{lines[0], lines[1], lines[2]}, s, v);
}

CandidateAlignment parse_fragment_row(std::string_view row, const Sequence& s, const Sequence& v) {
    std::string compact;
    for (char c : row) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    return parse_columns(nullptr, std::move(compact), s, v);
}

}  // namespace gapalign
