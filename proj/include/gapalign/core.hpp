#pragma once

// Domain types shared by every gapalign module.
//
// Conventions: all indices are 0-based. S is the reference (length m), V is
// the fragment being placed along it (length n, normally n <= m).

#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gapalign {

enum class ErrorKind {
    empty_input,
    order_violation,
    structural_violation,
    parse,
    size_limit,
    empty_chain,
    usage,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure with a 1-based source position (line 0 when not line-oriented).
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class Alphabet {
public:
    /// A, C, G, T.
    static Alphabet dna();
    /// Any ASCII letter A-Z. This is the default.
    static Alphabet uppercase();
    /// "dna" or "uppercase"; anything else is a usage error.
    static Alphabet from_name(std::string_view name);

    const std::string& name() const noexcept { return name_; }
    bool contains(char c) const noexcept { return members_[static_cast<unsigned char>(c)]; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.name_ == b.name_; }

private:
    Alphabet(std::string name, std::string_view symbols);

    std::string name_;
    std::bitset<256> members_;
};

class Sequence {
public:
    Sequence() : alphabet_(Alphabet::uppercase()) {}
    /// Throws ParseError (line 0, 1-based column) on a residue outside the alphabet.
    Sequence(std::string id, std::string residues, Alphabet alphabet = Alphabet::uppercase());

    const std::string& id() const noexcept { return id_; }
    const std::string& residues() const noexcept { return residues_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t length() const noexcept { return residues_.size(); }
    bool empty() const noexcept { return residues_.empty(); }
    char operator[](std::size_t i) const { return residues_[i]; }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.id_ == b.id_ && a.residues_ == b.residues_ && a.alphabet_ == b.alphabet_;
    }

private:
    std::string id_;
    std::string residues_;
    Alphabet alphabet_;
};

/// V[v_start, v_start + length) == S[s_start, s_start + length).
struct MatchBlock {
    std::size_t v_start = 0;
    std::size_t s_start = 0;
    std::size_t length = 0;

    std::size_t v_end() const noexcept { return v_start + length; }
    std::size_t s_end() const noexcept { return s_start + length; }

    friend auto operator<=>(const MatchBlock&, const MatchBlock&) = default;
};

/// Throws structural_violation if the block is out of range or its symbols differ.
void validate_block(const MatchBlock& block, const Sequence& s, const Sequence& v);

/// An ordered chain of blocks, strictly increasing and non-overlapping in both
/// sequences. Ordering and equality are lexicographic on the block list.
class CandidateAlignment {
public:
    CandidateAlignment() = default;
    /// Throws structural_violation on zero-length, overlapping or crossing blocks.
    explicit CandidateAlignment(std::vector<MatchBlock> blocks);

    std::span<const MatchBlock> blocks() const noexcept { return blocks_; }
    std::size_t coverage() const noexcept { return coverage_; }
    /// True when no two consecutive blocks are contiguous in both sequences.
    bool canonical() const noexcept { return canonical_; }
    bool empty() const noexcept { return blocks_.empty(); }

    void validate_against(const Sequence& s, const Sequence& v) const;

    friend bool operator==(const CandidateAlignment& a, const CandidateAlignment& b) {
        return a.blocks_ == b.blocks_;
    }
    friend auto operator<=>(const CandidateAlignment& a, const CandidateAlignment& b) {
        return a.blocks_ <=> b.blocks_;
    }

private:
    std::vector<MatchBlock> blocks_;
    std::size_t coverage_ = 0;
    bool canonical_ = true;
};

/// Merges every consecutive pair that is contiguous in both S and V.
CandidateAlignment canonicalize(const CandidateAlignment& chain);

/// Interior gap-run lengths with their mean and population variance.
struct GapStatistics {
    std::vector<std::size_t> runs;
    double mean = 0.0;
    double variance = 0.0;

    friend bool operator==(const GapStatistics&, const GapStatistics&) = default;
};

/// Linear-gap scoring for the dynamic-programming baselines.
struct ScoringScheme {
    double match = 1.0;
    double mismatch = -1.0;
    double gap = -1.0;

    /// Throws usage unless match > mismatch, mismatch <= 0 and gap <= 0.
    void validate() const;
    double substitution(char a, char b) const noexcept { return a == b ? match : mismatch; }

    /// "match,mismatch,gap", e.g. "1,-1,-1".
    static ScoringScheme parse(std::string_view text);

    friend bool operator==(const ScoringScheme&, const ScoringScheme&) = default;
};

struct ComparisonCounters {
    /// Whole-substring equality tests performed.
    std::uint64_t substring_comparisons = 0;
    /// Symbols inspected, with short-circuit on the first mismatch.
    std::uint64_t char_comparisons = 0;
    /// Symbols that would be inspected without short-circuiting.
    std::uint64_t char_comparisons_worst_case = 0;
    /// sum_{k=0}^{n-1} (m - (n - k)) * (n - k), the commonly quoted comparison count.
    std::uint64_t paper_formula_value = 0;

    ComparisonCounters& operator+=(const ComparisonCounters& other);
    friend bool operator==(const ComparisonCounters&, const ComparisonCounters&) = default;
};

}  // namespace gapalign
