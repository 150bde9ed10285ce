#include <string>

#include <fmt/format.h>
#include <json.hpp>

#include "gapalign/io.hpp"

namespace gapalign {

using nlohmann::json;

namespace {

std::string join_runs(const std::vector<std::size_t>& runs) {
    if (runs.empty()) return "-";
    return fmt::format("{}", fmt::join(runs, ","));
}

void append_candidate_text(std::string& out, const AlignmentReport& report, const ScoredCandidate& c,
                           std::string_view label, bool show_substitutions) {
    const RenderedAlignment r = render(c.chain, report.s, report.v, show_substitutions);
    out += fmt::format("{} (coverage {}/{})\n", label, c.chain.coverage(), report.v.length());
    out += r.str();
    out += '\n';
}

void append_statistics_table(std::string& out, const std::vector<ScoredCandidate>& list) {
    out += "statistics\n";
    out += fmt::format("{:>4} {:>5} {:>5} {}\n", "#", "mean", "variance", "runs");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const GapStatistics& st = list[i].stats;
        out += fmt::format("{:>4} {:.3f} {:.3f} {}\n", i + 1, st.mean, st.variance, join_runs(st.runs));
    }
}

std::string emit_text(const AlignmentReport& report) {
    std::string out;
    out += fmt::format("algorithm: {}\n", to_string(report.algorithm));
    out += fmt::format("S: {} (m={})\n", report.s.id(), report.s.length());
    out += fmt::format("V: {} (n={})\n", report.v.id(), report.v.length());
    if (report.swapped) out += "roles: swapped; gaps in the fragment row denote insertions relative to the original S\n";

    if (report.scored) {
        const ScoredAlignment& a = *report.scored;
        out += fmt::format("scheme: match {} mismatch {} gap {}\n", report.scheme.match, report.scheme.mismatch,
                           report.scheme.gap);
        out += fmt::format("score: {}\n", a.score);
        out += fmt::format("offsets: s={} v={}\n\n", a.s_start, a.v_start);
        std::string mask;
        for (bool b : a.match_mask) mask.push_back(b ? '|' : ' ');
        out += a.aligned_s + '\n' + mask + '\n' + a.aligned_v + '\n';
        return out;
    }

    const bool partial = report.outcome == ChainOutcome::no_full_cover;
    out += fmt::format("outcome: {}\n", partial ? "partial" : "complete");
    out += fmt::format("policy: {} (tolerance {})\n", to_string(report.chain_options.policy.mode),
                       report.chain_options.policy.tolerance);
    out += fmt::format("candidates: {}{}\n", report.candidates.size(), report.truncated ? " (truncated)" : "");
    if (report.selected) out += fmt::format("selected: {}\n", *report.selected + 1);
    out += '\n';

    for (std::size_t i = 0; i < report.candidates.size(); ++i) {
        const bool chosen = report.selected && *report.selected == i;
        append_candidate_text(out, report, report.candidates[i],
                              fmt::format("candidate {}{}", i + 1, chosen ? " [selected]" : ""), partial);
    }
    if (partial) {
        if (report.partial.empty() && report.candidates.empty()) {
            out += "no matching blocks\n\n";
        }
        for (std::size_t i = 0; i < report.partial.size(); ++i) {
            append_candidate_text(out, report, report.partial[i], fmt::format("best partial {}", i + 1), true);
        }
    }
    if (!report.candidates.empty()) append_statistics_table(out, report.candidates);
    if (!report.partial.empty()) append_statistics_table(out, report.partial);

    const ComparisonCounters& c = report.counters;
    out += "counters\n";
    out += fmt::format("  substring_comparisons: {}\n", c.substring_comparisons);
    out += fmt::format("  char_comparisons: {}\n", c.char_comparisons);
    out += fmt::format("  char_comparisons_worst_case: {}\n", c.char_comparisons_worst_case);
    out += fmt::format("  paper_formula_value: {}\n", c.paper_formula_value);
    return out;
}

json sequence_json(const Sequence& s) {
    return {{"id", s.id()}, {"residues", s.residues()}, {"alphabet", s.alphabet().name()}};
}

json candidate_json(const ScoredCandidate& c, const AlignmentReport& report, bool show_substitutions) {
    json blocks = json::array();
    for (const MatchBlock& b : c.chain.blocks()) blocks.push_back({b.v_start, b.s_start, b.length});
    const RenderedAlignment r = render(c.chain, report.s, report.v, show_substitutions);
    return {{"blocks", blocks},
            {"coverage", c.chain.coverage()},
            {"runs", c.stats.runs},
            {"mean", c.stats.mean},
            {"variance", c.stats.variance},
            {"rendered", {r.reference, r.marks, r.fragment}}};
}

std::string emit_json(const AlignmentReport& report) {
    const bool partial = report.outcome == ChainOutcome::no_full_cover;
    json doc;
    doc["schema_version"] = report_schema_version;
    doc["algorithm"] = to_string(report.algorithm);
    doc["s"] = sequence_json(report.s);
    doc["v"] = sequence_json(report.v);
    doc["swapped"] = report.swapped;
    doc["outcome"] = partial ? "partial" : "complete";
    doc["policy"] = {{"mode", to_string(report.chain_options.policy.mode)},
                     {"tolerance", report.chain_options.policy.tolerance}};
    doc["options"] = {{"min_window", report.match_options.min_window},
                      {"early_stop", report.match_options.early_stop},
                      {"max_candidates", report.chain_options.max_candidates},
                      {"beam_width", report.chain_options.beam_width},
                      {"require_full_coverage", report.chain_options.require_full_coverage},
                      {"prefer_larger_blocks", report.chain_options.prefer_larger_blocks},
                      {"effective_beam_width", report.effective_beam_width}};
    doc["scheme"] = {{"match", report.scheme.match}, {"mismatch", report.scheme.mismatch}, {"gap", report.scheme.gap}};
    doc["counters"] = {{"substring_comparisons", report.counters.substring_comparisons},
                       {"char_comparisons", report.counters.char_comparisons},
                       {"char_comparisons_worst_case", report.counters.char_comparisons_worst_case},
                       {"paper_formula_value", report.counters.paper_formula_value}};
    doc["truncated"] = report.truncated;
    doc["candidates"] = json::array();
    for (const ScoredCandidate& c : report.candidates) doc["candidates"].push_back(candidate_json(c, report, partial));
    doc["partial"] = json::array();
    for (const ScoredCandidate& c : report.partial) doc["partial"].push_back(candidate_json(c, report, true));
    doc["selected"] = report.selected ? json(*report.selected) : json(nullptr);
    if (report.scored) {
        const ScoredAlignment& a = *report.scored;
        doc["scored"] = {{"aligned_s", a.aligned_s}, {"aligned_v", a.aligned_v}, {"score", a.score},
                         {"match_mask", a.match_mask}, {"s_start", a.s_start},   {"v_start", a.v_start}};
    } else {
        doc["scored"] = nullptr;
    }
    return doc.dump(2) + '\n';
}

Sequence sequence_from_json(const json& j) {
    return Sequence(j.at("id").get<std::string>(), j.at("residues").get<std::string>(),
                    Alphabet::from_name(j.at("alphabet").get<std::string>()));
}

ScoredCandidate candidate_from_json(const json& j) {
    std::vector<MatchBlock> blocks;
    for (const json& b : j.at("blocks")) blocks.push_back({b.at(0).get<std::size_t>(), b.at(1).get<std::size_t>(), b.at(2).get<std::size_t>()});
    ScoredCandidate c{CandidateAlignment(std::move(blocks)), {}};
    c.stats.runs = j.at("runs").get<std::vector<std::size_t>>();
    c.stats.mean = j.at("mean").get<double>();
    c.stats.variance = j.at("variance").get<double>();
    return c;
}

}  // namespace

std::string emit_report(const AlignmentReport& report, ReportFormat format) {
    return format == ReportFormat::json ? emit_json(report) : emit_text(report);
}

AlignmentReport read_report_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, e.byte, fmt::format("malformed JSON report: {}", e.what()));
    }
    try {
        const std::string version = doc.at("schema_version").get<std::string>();
        if (version.substr(0, version.find('.')) != report_schema_version.substr(0, report_schema_version.find('.'))) {
            throw ParseError(0, 0, fmt::format("unsupported report schema_version '{}'", version));
        }
        AlignmentReport r;
        r.algorithm = algorithm_from_string(doc.at("algorithm").get<std::string>());
        r.s = sequence_from_json(doc.at("s"));
        r.v = sequence_from_json(doc.at("v"));
        r.swapped = doc.at("swapped").get<bool>();
        r.outcome = doc.at("outcome").get<std::string>() == "partial" ? ChainOutcome::no_full_cover
                                                                       : ChainOutcome::complete;
        r.chain_options.policy.mode = selection_mode_from_string(doc.at("policy").at("mode").get<std::string>());
        r.chain_options.policy.tolerance = doc.at("policy").at("tolerance").get<double>();
        const json& o = doc.at("options");
        r.match_options.min_window = o.at("min_window").get<std::size_t>();
        r.match_options.early_stop = o.at("early_stop").get<bool>();
        r.chain_options.max_candidates = o.at("max_candidates").get<std::size_t>();
        r.chain_options.beam_width = o.at("beam_width").get<std::size_t>();
        r.chain_options.require_full_coverage = o.at("require_full_coverage").get<bool>();
        r.chain_options.prefer_larger_blocks = o.at("prefer_larger_blocks").get<bool>();
        r.effective_beam_width = o.at("effective_beam_width").get<std::size_t>();
        const json& sc = doc.at("scheme");
        r.scheme = {sc.at("match").get<double>(), sc.at("mismatch").get<double>(), sc.at("gap").get<double>()};
        const json& c = doc.at("counters");
        r.counters.substring_comparisons = c.at("substring_comparisons").get<std::uint64_t>();
        r.counters.char_comparisons = c.at("char_comparisons").get<std::uint64_t>();
        r.counters.char_comparisons_worst_case = c.at("char_comparisons_worst_case").get<std::uint64_t>();
        r.counters.paper_formula_value = c.at("paper_formula_value").get<std::uint64_t>();
        r.truncated = doc.at("truncated").get<bool>();
        for (const json& j : doc.at("candidates")) r.candidates.push_back(candidate_from_json(j));
        for (const json& j : doc.at("partial")) r.partial.push_back(candidate_from_json(j));
        if (!doc.at("selected").is_null()) r.selected = doc.at("selected").get<std::size_t>();
        if (!doc.at("scored").is_null()) {
            const json& a = doc.at("scored");
            ScoredAlignment sa;
            sa.aligned_s = a.at("aligned_s").get<std::string>();
            sa.aligned_v = a.at("aligned_v").get<std::string>();
            sa.score = a.at("score").get<double>();
            sa.match_mask = a.at("match_mask").get<std::vector<bool>>();
            sa.s_start = a.at("s_start").get<std::size_t>();
            sa.v_start = a.at("v_start").get<std::size_t>();
            r.scored = std::move(sa);
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(0, 0, fmt::format("invalid JSON report: {}", e.what()));
    }
}

}  // namespace gapalign
