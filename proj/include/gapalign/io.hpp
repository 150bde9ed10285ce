#pragma once

// Sequence ingestion, dash-format alignment parsing and report output.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gapalign/chainer.hpp"
#include "gapalign/core.hpp"
#include "gapalign/report.hpp"

namespace gapalign {

struct SequenceRecords {
    std::vector<Sequence> records;
    /// Non-fatal notices, e.g. renamed duplicate ids.
    std::vector<std::string> warnings;
};

/// Standard FASTA. Header lines start with '>' and the id is the first word
/// after it; ';' lines are comments. Sequence lines are concatenated with all
/// whitespace removed and folded to upper case. Duplicate ids get "_2", "_3",
/// ... appended. Throws empty_input without records and ParseError (1-based
/// line and column) for a symbol outside the alphabet.
SequenceRecords parse_fasta(std::string_view text, const Alphabet& alphabet = Alphabet::uppercase());
SequenceRecords parse_fasta(std::istream& in, const Alphabet& alphabet = Alphabet::uppercase());

std::string write_fasta(std::span<const Sequence> records, std::size_t line_width = 60);

/// One raw sequence; whitespace is dropped and letters are upper-cased.
Sequence parse_plain(std::string_view text, std::string id, const Alphabet& alphabet = Alphabet::uppercase());

/// FASTA when the first non-blank character is '>', otherwise plain text with
/// the file stem as id.
SequenceRecords read_sequence_file(const std::filesystem::path& path, const Alphabet& alphabet);

/// Inverse of render(). Line 1 must equal S, line 2 holds '|' marks and line 3
/// the fragment row; rows shorter than m are padded (marks with ' ', the
/// fragment with '-'). Non-dash symbols in line 3 stand for V[0], V[1], ... in
/// order; lowercase symbols are substitution placeholders and match nothing.
/// Throws ParseError naming the 1-based column.
CandidateAlignment parse_rendered(const RenderedAlignment& rendered, const Sequence& s, const Sequence& v);
/// Same, from a three-line text block.
CandidateAlignment parse_rendered(std::string_view block, const Sequence& s, const Sequence& v);

/// Parses a lone fragment row, e.g. "- - FTAL - - LA".
/// Whitespace is ignored and every uppercase symbol counts as matched.
CandidateAlignment parse_fragment_row(std::string_view row, const Sequence& s, const Sequence& v);

enum class ReportFormat { text, json };

inline constexpr std::string_view report_schema_version = "1.0";

std::string emit_report(const AlignmentReport& report, ReportFormat format);

/// Reads a JSON report back. Throws ParseError on malformed input or an
/// unsupported schema major version.
AlignmentReport read_report_json(std::string_view text);

}  // namespace gapalign
