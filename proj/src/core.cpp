#include "gapalign/core.hpp"

#include <fmt/format.h>

namespace gapalign {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::order_violation: return "order-violation";
    case ErrorKind::structural_violation: return "structural-violation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::empty_chain: return "empty-chain";
    case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::parse,
            line > 0 ? fmt::format("line {}, column {}: {}", line, column, message)
                     : fmt::format("column {}: {}", column, message)),
      line_(line),
      column_(column) {}

Alphabet::Alphabet(std::string name, std::string_view symbols) : name_(std::move(name)) {
    for (char c : symbols) members_.set(static_cast<unsigned char>(c));
}

Alphabet Alphabet::dna() { return Alphabet("dna", "ACGT"); }

Alphabet Alphabet::uppercase() { return Alphabet("uppercase", "ABCDEFGHIJKLMNOPQRSTUVWXYZ"); }

Alphabet Alphabet::from_name(std::string_view name) {
    if (name == "dna") return dna();
    if (name == "uppercase") return uppercase();
    throw Error(ErrorKind::usage, fmt::format("unknown alphabet '{}' (expected dna or uppercase)", name));
}

Sequence::Sequence(std::string id, std::string residues, Alphabet alphabet)
    : id_(std::move(id)), residues_(std::move(residues)), alphabet_(std::move(alphabet)) {
    for (std::size_t i = 0; i < residues_.size(); ++i) {
        if (!alphabet_.contains(residues_[i])) {
            throw ParseError(0, i + 1,
                             fmt::format("symbol '{}' in sequence '{}' is not in alphabet {}",
                                         residues_[i], id_, alphabet_.name()));
        }
    }
}

void validate_block(const MatchBlock& block, const Sequence& s, const Sequence& v) {
    if (block.length == 0 || block.v_end() > v.length() || block.s_end() > s.length()) {
        throw Error(ErrorKind::structural_violation,
                    fmt::format("block (v={}, s={}, len={}) is out of range for m={}, n={}",
                                block.v_start, block.s_start, block.length, s.length(), v.length()));
    }
    for (std::size_t i = 0; i < block.length; ++i) {
        if (v[block.v_start + i] != s[block.s_start + i]) {
            throw Error(ErrorKind::structural_violation,
                        fmt::format("block (v={}, s={}, len={}) mismatches at offset {}",
                                    block.v_start, block.s_start, block.length, i));
        }
    }
}

CandidateAlignment::CandidateAlignment(std::vector<MatchBlock> blocks) : blocks_(std::move(blocks)) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const MatchBlock& b = blocks_[i];
        if (b.length == 0) {
            throw Error(ErrorKind::structural_violation, fmt::format("block {} has zero length", i));
        }
        coverage_ += b.length;
        if (i == 0) continue;
        const MatchBlock& prev = blocks_[i - 1];
        if (prev.v_end() > b.v_start || prev.s_end() > b.s_start) {
            throw Error(ErrorKind::structural_violation,
                        fmt::format("blocks {} and {} overlap or cross", i - 1, i));
        }
        if (prev.v_end() == b.v_start && prev.s_end() == b.s_start) canonical_ = false;
    }
}

void CandidateAlignment::validate_against(const Sequence& s, const Sequence& v) const {
    for (const MatchBlock& b : blocks_) validate_block(b, s, v);
}

CandidateAlignment canonicalize(const CandidateAlignment& chain) {
    std::vector<MatchBlock> merged;
    merged.reserve(chain.blocks().size());
    for (const MatchBlock& b : chain.blocks()) {
        if (!merged.empty() && merged.back().v_end() == b.v_start && merged.back().s_end() == b.s_start) {
            merged.back().length += b.length;
        } else {
            merged.push_back(b);
        }
    }
    return CandidateAlignment(std::move(merged));
}

void ScoringScheme::validate() const {
    if (!(match > mismatch)) {
        throw Error(ErrorKind::usage, fmt::format("scoring scheme needs match > mismatch (got {} and {})", match, mismatch));
    }
    if (mismatch > 0.0) {
        throw Error(ErrorKind::usage, fmt::format("mismatch penalty must be <= 0 (got {})", mismatch));
    }
    if (gap > 0.0) throw Error(ErrorKind::usage, fmt::format("gap penalty must be <= 0 (got {})", gap));
}

ScoringScheme ScoringScheme::parse(std::string_view text) {
    auto bad = [&] {
        return Error(ErrorKind::usage, fmt::format("bad scoring scheme '{}' (expected match,mismatch,gap)", text));
    };
    std::vector<double> values;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string field(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(field, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != field.size()) throw bad();
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (values.size() != 3) throw bad();
    ScoringScheme scheme{values[0], values[1], values[2]};
    scheme.validate();
    return scheme;
}

ComparisonCounters& ComparisonCounters::operator+=(const ComparisonCounters& other) {
    substring_comparisons += other.substring_comparisons;
    char_comparisons += other.char_comparisons;
    char_comparisons_worst_case += other.char_comparisons_worst_case;
    paper_formula_value += other.paper_formula_value;
    return *this;
}

}  // namespace gapalign
