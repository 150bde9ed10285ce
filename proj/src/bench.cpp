#include "gapalign/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "gapalign/matcher.hpp"

namespace gapalign::bench {

void Config::validate() const {
    auto check_range = [](const std::vector<std::size_t>& values, std::string_view what) {
        if (values.size() < 2) throw Error(ErrorKind::usage, fmt::format("{} needs at least two points", what));
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] == 0) throw Error(ErrorKind::usage, fmt::format("{} contains zero", what));
            if (i > 0 && values[i] <= values[i - 1]) {
                throw Error(ErrorKind::usage, fmt::format("{} must be strictly increasing", what));
            }
        }
    };
    check_range(m_values, "m range");
    check_range(n_values, "n range");
    if (fixed_n == 0 || fixed_n > m_values.front()) {
        throw Error(ErrorKind::usage, fmt::format("fixed n={} must be in [1, smallest m={}]", fixed_n, m_values.front()));
    }
    if (n_values.back() > fixed_m) {
        throw Error(ErrorKind::usage, fmt::format("largest n={} exceeds fixed m={}", n_values.back(), fixed_m));
    }
    if (repeats == 0) throw Error(ErrorKind::usage, "repeats must be at least 1");
    if (alphabet.empty()) throw Error(ErrorKind::usage, "alphabet must not be empty");
}

std::vector<std::size_t> doubling_range(std::size_t lo, std::size_t hi, std::size_t factor) {
    if (lo == 0 || factor < 2 || lo > hi) {
        throw Error(ErrorKind::usage, fmt::format("degenerate range {}:{}:{}", lo, hi, factor));
    }
    std::vector<std::size_t> out;
    for (std::size_t x = lo; x <= hi; x *= factor) out.push_back(x);
    return out;
}

std::vector<std::size_t> parse_range(const std::string& text) {
    std::vector<std::size_t> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t colon = text.find(':', pos);
        const std::string field = text.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (field.empty() || used != field.size()) {
            throw Error(ErrorKind::usage, fmt::format("bad range '{}' (expected lo:hi or lo:hi:factor)", text));
        }
        parts.push_back(static_cast<std::size_t>(value));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) {
        throw Error(ErrorKind::usage, fmt::format("bad range '{}' (expected lo:hi or lo:hi:factor)", text));
    }
    return doubling_range(parts[0], parts[1], parts.size() == 3 ? parts[2] : 2);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw Error(ErrorKind::usage, "slope fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0 || y[i] <= 0) throw Error(ErrorKind::usage, "log-log fit needs positive values");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double k = static_cast<double>(x.size());
    const double denom = k * sxx - sx * sx;
    if (denom == 0.0) throw Error(ErrorKind::usage, "slope fit needs two distinct x values");
    return (k * sxy - sx * sy) / denom;
}

std::string random_residues(std::size_t length, const std::string& alphabet, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string out(length, ' ');
    for (char& c : out) c = alphabet[pick(rng)];
    return out;
}

Sample measure(std::size_t m, std::size_t n, const std::string& alphabet, std::uint64_t seed, std::size_t repeats) {
    const Sequence s("S", random_residues(m, alphabet, seed));
    const Sequence v("V", random_residues(n, alphabet, seed ^ 0x9e3779b97f4a7c15ULL));
    Sample sample{m, n, {}, count_comparisons(m, n), 0.0};
    std::vector<double> times;
    for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
        const auto start = std::chrono::steady_clock::now();
        MatchIndex index = enumerate_matches(s, v);
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(stop - start).count());
        sample.measured = index.counters;
    }
    std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
    sample.seconds = times[times.size() / 2];
    return sample;
}

namespace {

double fit(const std::vector<Sample>& samples, bool against_m) {
    std::vector<double> x, y;
    for (const Sample& s : samples) {
        x.push_back(static_cast<double>(against_m ? s.m : s.n));
        y.push_back(static_cast<double>(s.measured.substring_comparisons));
    }
    return loglog_slope(x, y);
}

}  // namespace

Report run(const Config& config) {
    config.validate();
    Report report;
    std::uint64_t seed = config.seed;
    for (std::size_t m : config.m_values) {
        report.m_sweep.push_back(measure(m, config.fixed_n, config.alphabet, seed++, config.repeats));
    }
    for (std::size_t n : config.n_values) {
        report.n_sweep.push_back(measure(config.fixed_m, n, config.alphabet, seed++, config.repeats));
    }
    report.slope_vs_m = fit(report.m_sweep, true);
    report.slope_vs_n = fit(report.n_sweep, false);
    return report;
}

std::string format_report(const Report& report, const Config& config) {
    std::string out;
    auto table = [&out](const std::vector<Sample>& samples) {
        out += fmt::format("{:>6} {:>5} {:>14} {:>14} {:>14} {:>12} {:>6}\n", "m", "n", "substring_cmp", "char_cmp",
                           "paper_formula", "seconds", "exact");
        for (const Sample& s : samples) {
            const bool exact = s.measured.substring_comparisons == s.predicted.substring_comparisons;
            out += fmt::format("{:>6} {:>5} {:>14} {:>14} {:>14} {:>12.6f} {:>6}\n", s.m, s.n,
                               s.measured.substring_comparisons, s.measured.char_comparisons,
                               s.measured.paper_formula_value, s.seconds, exact ? "yes" : "NO");
        }
    };
    out += fmt::format("sweep over m (n fixed at {}), alphabet {}, seed {}\n", config.fixed_n, config.alphabet,
                       config.seed);
    table(report.m_sweep);
    out += fmt::format("\nsweep over n (m fixed at {})\n", config.fixed_m);
    table(report.n_sweep);
    out += "\ngrowth of substring comparisons (log-log slope)\n";
    out += fmt::format("  vs m: measured {:.3f}, claimed O(mn) exponent 1\n", report.slope_vs_m);
    out += fmt::format("  vs n: measured {:.3f}, claimed O(mn) exponent 1\n", report.slope_vs_n);
    return out;
}

}  // namespace gapalign::bench
