#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "gapalign/io.hpp"

namespace gapalign {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

char fold(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

struct PendingRecord {
    std::string id;
    std::string residues;
};

}  // namespace

SequenceRecords parse_fasta(std::string_view text, const Alphabet& alphabet) {
    std::vector<PendingRecord> pending;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (!line.empty() && line.front() == '>') {
            std::string_view rest = line.substr(1);
            std::size_t begin = 0;
            while (begin < rest.size() && is_space(rest[begin])) ++begin;
            std::size_t end = begin;
            while (end < rest.size() && !is_space(rest[end])) ++end;
            std::string id(rest.substr(begin, end - begin));
            if (id.empty()) id = fmt::format("seq{}", pending.size() + 1);
            pending.push_back({std::move(id), {}});
            continue;
        }
        if (!line.empty() && line.front() == ';') continue;

        for (std::size_t col = 0; col < line.size(); ++col) {
            const char c = line[col];
            if (is_space(c)) continue;
            if (pending.empty()) throw ParseError(line_no, col + 1, "sequence data before the first '>' header");
            const char folded = fold(c);
            if (!alphabet.contains(folded)) {
                throw ParseError(line_no, col + 1, fmt::format("symbol '{}' is not in alphabet {}", c, alphabet.name()));
            }
            pending.back().residues.push_back(folded);
        }
    }
    if (pending.empty()) throw Error(ErrorKind::empty_input, "no FASTA records found");

    SequenceRecords out;
    std::set<std::string> seen;
    for (auto& [id, residues] : pending) {
        std::string unique = id;
        for (std::size_t k = 2; seen.count(unique) > 0; ++k) unique = fmt::format("{}_{}", id, k);
        if (unique != id) out.warnings.push_back(fmt::format("duplicate id '{}' renamed to '{}'", id, unique));
        seen.insert(unique);
        out.records.emplace_back(std::move(unique), std::move(residues), alphabet);
    }
    return out;
}

SequenceRecords parse_fasta(std::istream& in, const Alphabet& alphabet) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_fasta(buffer.str(), alphabet);
}

std::string write_fasta(std::span<const Sequence> records, std::size_t line_width) {
    if (line_width == 0) line_width = 60;
    std::string out;
    for (const Sequence& seq : records) {
        out += '>';
        out += seq.id();
        out += '\n';
        const std::string& r = seq.residues();
        for (std::size_t i = 0; i < r.size(); i += line_width) {
            out.append(r, i, line_width);
            out += '\n';
        }
    }
    return out;
}

Sequence parse_plain(std::string_view text, std::string id, const Alphabet& alphabet) {
    std::string residues;
    std::size_t line_no = 1;
    std::size_t col = 0;
    for (char c : text) {
        ++col;
        if (c == '\n') {
            ++line_no;
            col = 0;
            continue;
        }
        if (is_space(c)) continue;
        const char folded = fold(c);
        if (!alphabet.contains(folded)) {
            throw ParseError(line_no, col, fmt::format("symbol '{}' is not in alphabet {}", c, alphabet.name()));
        }
        residues.push_back(folded);
    }
    return Sequence(std::move(id), std::move(residues), alphabet);
}

SequenceRecords read_sequence_file(const std::filesystem::path& path, const Alphabet& alphabet) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::usage, fmt::format("cannot open '{}'", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    for (char c : text) {
        if (is_space(c)) continue;
        if (c == '>') return parse_fasta(text, alphabet);
        break;
    }
    SequenceRecords out;
    out.records.push_back(parse_plain(text, path.stem().string(), alphabet));
    return out;
}

}  // namespace gapalign
