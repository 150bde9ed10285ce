#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gapalign/bench.hpp"
#include "gapalign/io.hpp"
#include "gapalign/report.hpp"
#include "gapalign/verify.hpp"

namespace gapalign::cli {

namespace {

struct AlignArgs {
    std::vector<std::string> files;
    std::string s_literal;
    std::string v_literal;
    std::string algo = "proposed";
    std::string select = "mean";
    double tolerance = 1e-9;
    bool swap = false;
    std::size_t min_window = 1;
    bool early_stop = false;
    std::size_t max_candidates = 1024;
    std::size_t beam = 256;
    bool uncapped = false;
    bool partial = false;
    std::string format = "text";
    std::string scheme = "1,-1,-1";
    std::string alphabet;
    std::vector<std::string> candidate_rows;
};

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 42;
    std::size_t cases = 100;
    std::size_t max_m = 0;
    std::size_t max_n = 0;
};

struct BenchArgs {
    std::string m_range = "256:4096";
    std::string n_range = "8:128";
    std::size_t fixed_n = 16;
    std::size_t fixed_m = 4096;
    std::string alphabet = "ACGT";
    std::uint64_t seed = 1;
    std::size_t repeats = 3;
};

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
    err << fmt::format("gapalign: error[{}]: {}\n", kind, message);
}

Alphabet resolve_alphabet(const std::string& flag) {
    if (!flag.empty()) return Alphabet::from_name(flag);
    if (const char* env = std::getenv(alphabet_env); env != nullptr && *env != '\0') return Alphabet::from_name(env);
    return Alphabet::uppercase();
}

Sequence load_operand(const std::string& path, const Alphabet& alphabet, std::ostream& err) {
    SequenceRecords records = read_sequence_file(path, alphabet);
    for (const std::string& w : records.warnings) err << "gapalign: warning: " << w << '\n';
    if (records.records.size() > 1) {
        err << fmt::format("gapalign: warning: '{}' holds {} records; using the first\n", path, records.records.size());
    }
    return records.records.front();
}

int cmd_align(const AlignArgs& a, std::ostream& out, std::ostream& err) {
    const Alphabet alphabet = resolve_alphabet(a.alphabet);
    std::optional<Sequence> s;
    std::optional<Sequence> v;
    if (!a.files.empty()) {
        if (a.files.size() != 2) throw Error(ErrorKind::usage, "give two sequence files (S then V)");
        if (!a.s_literal.empty() || !a.v_literal.empty()) {
            throw Error(ErrorKind::usage, "use either sequence files or --s/--v, not both");
        }
        s = load_operand(a.files[0], alphabet, err);
        v = load_operand(a.files[1], alphabet, err);
    } else {
        if (a.s_literal.empty() || a.v_literal.empty()) throw Error(ErrorKind::usage, "both --s and --v are required");
        s = parse_plain(a.s_literal, "S", alphabet);
        v = parse_plain(a.v_literal, "V", alphabet);
    }

    AlignOptions options;
    options.algorithm = algorithm_from_string(a.algo);
    options.swap = a.swap;
    options.scheme = ScoringScheme::parse(a.scheme);
    options.match.min_window = a.min_window;
    options.match.early_stop = a.early_stop;
    options.chain.max_candidates = a.uncapped ? ChainOptions::unlimited : a.max_candidates;
    options.chain.beam_width = a.uncapped ? ChainOptions::unlimited : a.beam;
    options.chain.require_full_coverage = !a.partial;
    options.chain.policy = {selection_mode_from_string(a.select), a.tolerance};
    options.chain.validate();

    AlignmentReport report = align(*s, *v, options);
    if (!a.candidate_rows.empty()) {
        if (options.algorithm != Algorithm::proposed) throw Error(ErrorKind::usage, "--candidate needs --algo proposed");
        std::vector<CandidateAlignment> keep;
        for (const std::string& row : a.candidate_rows) keep.push_back(parse_fragment_row(row, report.s, report.v));
        report = restrict_candidates(std::move(report), keep);
    }
    out << emit_report(report, a.format == "json" ? ReportFormat::json : ReportFormat::text);
    if (report.algorithm == Algorithm::proposed && report.outcome == ChainOutcome::no_full_cover && !a.partial) {
        report_error(err, "no-full-cover", "no alignment covers all of V; rerun with --partial to accept partial chains");
        return exit_no_full_cover;
    }
    return exit_ok;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, const verify::Targets& targets) {
    verify::Config config;
    config.suite = verify::suite_from_string(a.suite);
    config.seed = a.seed;
    config.cases = a.cases;
    config.max_m = a.max_m;
    config.max_n = a.max_n;
    const verify::Outcome outcome = verify::run(config, targets);
    out << verify::describe(outcome, config);
    return outcome.failure ? exit_disagreement : exit_ok;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    bench::Config config;
    config.m_values = bench::parse_range(a.m_range);
    config.n_values = bench::parse_range(a.n_range);
    config.fixed_n = a.fixed_n;
    config.fixed_m = a.fixed_m;
    config.alphabet = a.alphabet;
    config.seed = a.seed;
    config.repeats = a.repeats;
    out << bench::format_report(bench::run(config), config);
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run(args, out, err, verify::Targets::production());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const verify::Targets& targets) {
    CLI::App app{"Pairwise alignment by shrinking-window substring matching, with NW/SW baselines"};
    app.name("gapalign");
    app.require_subcommand(1);

    AlignArgs align_args;
    CLI::App* align_cmd = app.add_subcommand("align", "Align fragment V along reference S");
    align_cmd->add_option("files", align_args.files, "S and V as FASTA or plain-text files");
    align_cmd->add_option("--s", align_args.s_literal, "Reference sequence literal");
    align_cmd->add_option("--v", align_args.v_literal, "Fragment sequence literal");
    align_cmd->add_option("--algo", align_args.algo, "proposed | nw | sw")
        ->check(CLI::IsMember({"proposed", "nw", "sw"}));
    align_cmd->add_option("--select", align_args.select, "mean | variance | mean-only")
        ->check(CLI::IsMember({"mean", "variance", "mean-only"}));
    align_cmd->add_option("--tolerance", align_args.tolerance, "Equality tolerance for gap statistics");
    align_cmd->add_flag("--swap", align_args.swap, "Swap S and V; fragment gaps then denote insertions");
    align_cmd->add_option("--min-window", align_args.min_window, "Smallest match window");
    align_cmd->add_flag("--early-stop", align_args.early_stop, "Stop shrinking once a full cover exists");
    align_cmd->add_option("--max-candidates", align_args.max_candidates, "Cap on emitted candidates");
    align_cmd->add_option("--beam", align_args.beam, "Partial chains kept per frontier");
    align_cmd->add_flag("--uncapped", align_args.uncapped, "Disable both caps (exhaustive; small inputs only)");
    align_cmd->add_flag("--partial", align_args.partial, "Accept maximum-coverage chains when V cannot be covered");
    align_cmd->add_option("--format", align_args.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    align_cmd->add_option("--scheme", align_args.scheme, "match,mismatch,gap for nw/sw");
    align_cmd->add_option("--alphabet", align_args.alphabet,
                          fmt::format("dna | uppercase (default from {} or uppercase)", alphabet_env));
    align_cmd->add_option("--candidate", align_args.candidate_rows,
                          "Restrict selection to this fragment row (repeatable), e.g. \"--T---ACTAG\"");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-check the algorithms against brute-force oracles");
    verify_cmd->add_option("--suite", verify_args.suite, "matcher | chainer | nw | sw | all")
        ->check(CLI::IsMember({"matcher", "chainer", "nw", "sw", "all"}));
    verify_cmd->add_option("--seed", verify_args.seed, "RNG seed");
    verify_cmd->add_option("--cases", verify_args.cases, "Random cases per suite (>= 1)");
    verify_cmd->add_option("--max-m", verify_args.max_m,
                           "Upper bound on m (matcher 20, chainer 12, nw/sw 8 by default; chainer <= 12, nw/sw <= 8)");
    verify_cmd->add_option("--max-n", verify_args.max_n, "Upper bound on n (matcher 10, chainer 6, nw/sw 8 by default)");

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Measure comparison-count growth of the matcher");
    bench_cmd->add_option("--m-range", bench_args.m_range, "lo:hi[:factor] for the m sweep");
    bench_cmd->add_option("--n-range", bench_args.n_range, "lo:hi[:factor] for the n sweep");
    bench_cmd->add_option("--fixed-n", bench_args.fixed_n, "n held fixed during the m sweep");
    bench_cmd->add_option("--fixed-m", bench_args.fixed_m, "m held fixed during the n sweep");
    bench_cmd->add_option("--alphabet", bench_args.alphabet, "Symbols for random sequences");
    bench_cmd->add_option("--seed", bench_args.seed, "RNG seed");
    bench_cmd->add_option("--repeats", bench_args.repeats, "Timing repeats per point");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what());
        return exit_usage;
    }

    try {
        if (align_cmd->parsed()) return cmd_align(align_args, out, err);
        if (verify_cmd->parsed()) return cmd_verify(verify_args, out, targets);
        if (bench_cmd->parsed()) return cmd_bench(bench_args, out);
    } catch (const Error& e) {
        report_error(err, to_string(e.kind()), e.what());
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace gapalign::cli
