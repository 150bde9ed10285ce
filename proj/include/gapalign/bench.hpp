#pragma once

// Empirical growth of the matcher's comparison counts.
//
// Each sample runs the full window descent on seeded random sequences and
// records the measured counters next to the closed-form prediction. Growth
// exponents are least-squares slopes on log-log axes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gapalign/core.hpp"

namespace gapalign::bench {

struct Sample {
    std::size_t m = 0;
    std::size_t n = 0;
    ComparisonCounters measured;
    ComparisonCounters predicted;
    /// Median wall time of one enumerate_matches call.
    double seconds = 0.0;
};

struct Config {
    std::vector<std::size_t> m_values{256, 512, 1024, 2048, 4096};
    std::size_t fixed_n = 16;
    std::vector<std::size_t> n_values{8, 16, 32, 64, 128};
    std::size_t fixed_m = 4096;
    std::string alphabet = "ACGT";
    std::uint64_t seed = 1;
    std::size_t repeats = 3;

    /// Throws usage on empty or non-increasing ranges, n > m, repeats == 0 or an empty alphabet.
    void validate() const;
};

struct Report {
    std::vector<Sample> m_sweep;
    std::vector<Sample> n_sweep;
    double slope_vs_m = 0.0;
    double slope_vs_n = 0.0;
};

/// Geometric range lo, lo*factor, ... up to hi inclusive.
std::vector<std::size_t> doubling_range(std::size_t lo, std::size_t hi, std::size_t factor = 2);

/// Parses "lo:hi" or "lo:hi:factor".
std::vector<std::size_t> parse_range(const std::string& text);

/// Least-squares slope of log(y) against log(x). Needs two distinct positive x values.
double loglog_slope(std::span<const double> x, std::span<const double> y);

std::string random_residues(std::size_t length, const std::string& alphabet, std::uint64_t seed);

Sample measure(std::size_t m, std::size_t n, const std::string& alphabet, std::uint64_t seed, std::size_t repeats);

Report run(const Config& config);

/// Tabular growth report with the fitted and the claimed O(mn) exponents.
std::string format_report(const Report& report, const Config& config);

}  // namespace gapalign::bench
