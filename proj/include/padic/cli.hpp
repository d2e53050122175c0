#pragma once

// Command-line surface: classification, verification, the discriminant
// table, growth profiling, and raw square-root extraction, with text, JSON
// and (for the tabular commands) CSV output. JSON is the stable contract;
// identical invocations produce byte-identical reports apart from the
// version field. Exit codes: 0 success, 1 computational error, 2 usage
// error, 3 internal inconsistency.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "padic/errors.hpp"
#include "padic/gibbs/model.hpp"
#include "padic/number.hpp"
#include "padic/residue.hpp"
#include "padic/solvers.hpp"
#include "padic/sqrt.hpp"
#include "padic/version.hpp"

namespace padic::cli {

using nlohmann::json;

namespace detail {

inline json record_json(const PadicNumber& x) {
    const PadicRecord r = to_record(x);
    return json{{"prime", r.prime},
                {"zero_flag", r.zero_flag},
                {"valuation", r.valuation},
                {"digits", r.digits},
                {"abs_precision", r.abs_precision}};
}

inline json residue_json(const residue::Residue& r) {
    return json{{"modulus", r.modulus}, {"value", r.value.str()}};
}

inline json verdict_json(const residue::ExistenceVerdict& v) {
    json w = json::array();
    for (const auto& r : v.witnesses) w.push_back(residue_json(r));
    return json{{"count", v.count}, {"reason", residue::reason_name(v.reason)}, {"witnesses", w}};
}

inline json note_json(const solvers::DiscrepancyNote& n) {
    return json{{"topic", n.topic}, {"paper", n.paper_value}, {"computed", n.computed_value}};
}

inline json profile_json(const solvers::GrowthProfile& g) {
    return json{{"star_exponents", g.star_exponents},
                {"max_exponents", g.max_exponents},
                {"level_growth", g.level_growth},
                {"verdict", solvers::boundedness_name(g.verdict)},
                {"exact_mode", g.exact_mode}};
}

inline const char* plus_minus(bool b) { return b ? "+" : "-"; }

struct Report {
    json envelope;
    std::string text;
    std::string csv; // empty unless the subcommand supports CSV
};

inline json make_envelope(const std::string& subcommand, json input) {
    if (!input.is_object()) input = json::object();
    return json{{"tool", {{"name", kToolName}, {"version", kVersion}, {"schema", kJsonSchemaVersion}}},
                {"input", std::move(input)},
                {"subcommand", subcommand},
                {"results", json::object()},
                {"discrepancy_notes", json::array()},
                {"status", "ok"}};
}

inline void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw Error(ErrorCode::DomainError, "cannot open output file " + out_path);
    file << content;
}

// Named boundary fields produced by the solvers for a (p, J) cell.
struct NamedField {
    std::string name;
    gibbs::BoundaryField field;
};

inline std::vector<NamedField> solver_fields(const gibbs::ModelParams& params,
                                             const std::vector<solvers::TISolution>& ti,
                                             const solvers::PeriodicOutcome& periodic) {
    std::vector<NamedField> fields;
    for (const auto& sol : ti)
        fields.push_back({"h" + std::to_string(sol.index), solvers::ti_field(sol, params)});
    if (periodic.solution) {
        fields.push_back({"per1", periodic.solution->field_34});
        fields.push_back({"per2", periodic.solution->field_43});
    }
    return fields;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-adic quasi Gibbs measure workbench for the Vannimenus model on the binary tree"};
    app.require_subcommand(1);

    i64 p = 0, j = 0, precision = kDefaultPrecision;
    int depth = 2, max_depth = 3;
    std::string format = "text", out_path, field_name = "h0";
    std::vector<i64> primes = {2, 3, 5, 7, 11, 13, 17, 19};
    i64 num = 0, den = 1;

    auto add_common = [&](CLI::App* sub, bool needs_p, bool needs_j) {
        if (needs_p) sub->add_option("--p", p, "prime p")->required();
        if (needs_j) sub->add_option("--j", j, "integer coupling J (nonzero)")->required();
        sub->add_option("--precision", precision, "absolute precision K (default 48)");
        sub->add_option("--format", format, "output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", out_path, "write the report to this file instead of stdout");
    };

    CLI::App* cmd_classify = app.add_subcommand("classify", "existence and boundedness for one (p, J) cell");
    add_common(cmd_classify, true, true);

    CLI::App* cmd_verify = app.add_subcommand("verify", "consistency and Z-recursion checks for every solver field");
    add_common(cmd_verify, true, true);
    cmd_verify->add_option("--depth", depth, "check depth n (1..3, default 2)");

    CLI::App* cmd_table1 = app.add_subcommand("table1", "existence of sqrt(D(theta)) per prime, J < 0");
    add_common(cmd_table1, false, true);
    cmd_table1->add_option("--primes", primes, "comma-separated primes")->delimiter(',');

    CLI::App* cmd_growth = app.add_subcommand("growth", "measure-norm growth profile for one boundary field");
    add_common(cmd_growth, true, true);
    cmd_growth->add_option("--field", field_name, "h0|h1|h2|per1|per2")
        ->check(CLI::IsMember({"h0", "h1", "h2", "per1", "per2"}));
    cmd_growth->add_option("--max-depth", max_depth, "profile depth (1..3, default 3)");

    CLI::App* cmd_sqrt = app.add_subcommand("sqrt", "p-adic square root of a rational");
    add_common(cmd_sqrt, true, false);
    cmd_sqrt->add_option("--num", num, "numerator")->required();
    cmd_sqrt->add_option("--den", den, "denominator (default 1)");

    CLI::App* cmd_info = app.add_subcommand("info", "tool version, defaults and limits");
    cmd_info->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_info->add_option("--out", out_path, "write the report to this file instead of stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto usage_error = [&](const std::string& message) {
        err << "usage error: " << message << "\n";
        return 2;
    };

    const bool has_p = cmd_classify->parsed() || cmd_verify->parsed() || cmd_growth->parsed() || cmd_sqrt->parsed();
    if (has_p && (p < 2 || !is_probable_prime(static_cast<u64>(p))))
        return usage_error("--p must be a prime (checked with a deterministic Miller-Rabin witness set)");
    if ((cmd_classify->parsed() || cmd_verify->parsed() || cmd_growth->parsed() || cmd_table1->parsed()) && j == 0)
        return usage_error("--j must be nonzero");
    if (precision < 8) return usage_error("--precision must be at least 8");
    if (cmd_table1->parsed()) {
        if (j >= 0) return usage_error("table1 requires J < 0");
        for (i64 q : primes)
            if (q < 2 || !is_probable_prime(static_cast<u64>(q)))
                return usage_error("--primes entries must all be prime");
    }
    if (cmd_verify->parsed() && (depth < 1 || depth > 3)) return usage_error("--depth must lie in 1..3");
    if (cmd_growth->parsed() && (max_depth < 1 || max_depth > 3))
        return usage_error("--max-depth must lie in 1..3");
    const bool csv_allowed = cmd_table1->parsed() || cmd_growth->parsed();
    if (format == "csv" && !csv_allowed) return usage_error("csv output exists only for table1 and growth");

    detail::Report report;
    try {
        if (cmd_classify->parsed()) {
            report.envelope = detail::make_envelope(
                "classify", json{{"p", p}, {"j", j}, {"precision", precision}, {"format", format}});
            const solvers::ClassificationReport rep = solvers::classify(p, j, precision);

            json ti_solutions_json = json::array();
            for (const auto& sol : rep.ti)
                ti_solutions_json.push_back(
                    {{"index", sol.index},
                     {"u", detail::record_json(truncate(sol.u, precision))},
                     {"h", detail::record_json(truncate(sol.h, precision))},
                     {"h_norm_exponent", -sol.h.valuation()},
                     {"residual_valuation_lower_bound", sol.residual.valuation_lower_bound()}});
            json periodic_json = {{"count", rep.periodic.count()},
                                  {"verdict", detail::verdict_json(rep.periodic_verdict)}};
            if (rep.periodic.solution) {
                periodic_json["u3"] = detail::record_json(truncate(rep.periodic.solution->u3, precision));
                periodic_json["u4"] = detail::record_json(truncate(rep.periodic.solution->u4, precision));
                periodic_json["h3"] = detail::record_json(truncate(rep.periodic.solution->h3, precision));
                periodic_json["h4"] = detail::record_json(truncate(rep.periodic.solution->h4, precision));
            } else {
                periodic_json["failed_condition"] = rep.periodic.failed_condition;
            }
            json bound_json = json::array();
            for (size_t i = 0; i < rep.ti.size(); ++i)
                bound_json.push_back({{"field", "h" + std::to_string(rep.ti[i].index)},
                                      {"verdict", solvers::boundedness_name(rep.ti_boundedness[i].second)},
                                      {"profile", detail::profile_json(rep.ti_profiles[i])}});

            report.envelope["results"] = {{"ti", {{"count", static_cast<int>(rep.ti.size())},
                                                  {"verdict", detail::verdict_json(rep.ti_verdict)},
                                                  {"solutions", ti_solutions_json}}},
                                          {"periodic", periodic_json},
                                          {"boundedness", bound_json}};
            for (const auto& note : rep.notes)
                report.envelope["discrepancy_notes"].push_back(detail::note_json(note));

            std::ostringstream text;
            text << "classification for p=" << p << ", J=" << j << " (precision " << precision << ")\n";
            text << "  translation-invariant measures: " << rep.ti.size() << " ("
                 << residue::reason_name(rep.ti_verdict.reason) << ")\n";
            for (size_t i = 0; i < rep.ti.size(); ++i) {
                const auto& sol = rep.ti[i];
                text << "    h" << sol.index << ": |h|_p = p^" << -sol.h.valuation() << ", "
                     << solvers::boundedness_name(rep.ti_boundedness[i].second) << "\n";
            }
            text << "  2-periodic measures: " << rep.periodic.count();
            if (!rep.periodic.solution) text << "  (" << rep.periodic.failed_condition << ")";
            text << "\n";
            for (const auto& note : rep.notes)
                text << "  note [" << note.topic << "]: paper: " << note.paper_value
                     << " | computed: " << note.computed_value << "\n";
            report.text = text.str();
        } else if (cmd_verify->parsed()) {
            report.envelope = detail::make_envelope(
                "verify",
                json{{"p", p}, {"j", j}, {"depth", depth}, {"precision", precision}, {"format", format}});
            const gibbs::ModelParams params = gibbs::ModelParams::make(p, j, precision);
            const auto ti = solvers::ti_solutions(params);
            const auto periodic = solvers::periodic_solutions(params);
            const auto fields = detail::solver_fields(params, ti, periodic);

            bool all_pass = true;
            json field_reports = json::array();
            std::ostringstream text;
            text << "verification for p=" << p << ", J=" << j << " at depth " << depth << "\n";
            for (const auto& nf : fields) {
                json consistency = json::array();
                json z_recursion = json::array();
                for (int n = 1; n <= depth; ++n) {
                    const auto rep = gibbs::check_consistency(n, nf.field, params);
                    all_pass = all_pass && rep.pass;
                    consistency.push_back({{"depth", rep.depth},
                                           {"pass", rep.pass},
                                           {"mismatch_zero_to_precision", rep.mismatch_zero_to_precision},
                                           {"worst_valuation", rep.worst_valuation},
                                           {"worst_config", rep.worst_config}});
                }
                for (int n = 1; n <= std::min(depth, 2); ++n) {
                    const bool ok = gibbs::verify_Z_recursion(n, nf.field, params);
                    all_pass = all_pass && ok;
                    z_recursion.push_back({{"depth", n}, {"pass", ok}});
                }
                field_reports.push_back(
                    {{"field", nf.name}, {"consistency", consistency}, {"z_recursion", z_recursion}});
                text << "  " << nf.name << ": consistency ";
                for (const auto& c : consistency) text << (c["pass"].get<bool>() ? "pass " : "FAIL ");
                text << "| Z-recursion ";
                for (const auto& c : z_recursion) text << (c["pass"].get<bool>() ? "pass " : "FAIL ");
                text << "\n";
            }
            report.envelope["results"] = {{"fields", field_reports}, {"all_pass", all_pass}};
            text << (all_pass ? "all checks passed\n" : "CHECKS FAILED\n");
            report.text = text.str();
            if (!all_pass)
                throw Error(ErrorCode::InternalInconsistency,
                            "a solver-produced field failed its consistency or Z-recursion check");
        } else if (cmd_table1->parsed()) {
            report.envelope = detail::make_envelope(
                "table1", json{{"primes", primes}, {"j", j}, {"precision", precision}, {"format", format}});
            const auto rows = solvers::table1(primes, j, precision);

            json rows_json = json::array();
            std::ostringstream text, csv;
            text << "existence of sqrt(D(theta)) for J=" << j << "\n";
            text << "  prime  paper  computed  agree\n";
            csv << "prime,paper_value,computed_value,agree_flag\n";
            for (const auto& row : rows) {
                const std::string paper =
                    row.paper_value ? detail::plus_minus(*row.paper_value) : std::string();
                rows_json.push_back({{"prime", row.prime},
                                     {"paper_value", row.paper_value ? json(paper) : json()},
                                     {"computed_value", detail::plus_minus(row.computed)},
                                     {"agree_flag", row.paper_value ? json(row.agree_with_paper) : json()}});
                text << "  " << row.prime << "\t" << (paper.empty() ? "." : paper) << "\t"
                     << detail::plus_minus(row.computed) << "\t"
                     << (row.paper_value ? (row.agree_with_paper ? "yes" : "NO") : ".") << "\n";
                csv << row.prime << "," << paper << "," << detail::plus_minus(row.computed) << ","
                    << (row.paper_value ? (row.agree_with_paper ? "yes" : "no") : "") << "\n";
                if (row.paper_value && !row.agree_with_paper)
                    report.envelope["discrepancy_notes"].push_back(
                        detail::note_json({"discriminant table at p = " + std::to_string(row.prime),
                                           paper, detail::plus_minus(row.computed)}));
            }
            report.envelope["results"] = {{"rows", rows_json}};
            report.text = text.str();
            report.csv = csv.str();
        } else if (cmd_growth->parsed()) {
            report.envelope = detail::make_envelope(
                "growth", json{{"p", p}, {"j", j}, {"field", field_name},
                               {"max_depth", max_depth}, {"precision", precision}, {"format", format}});
            const gibbs::ModelParams params = gibbs::ModelParams::make(p, j, precision);
            const auto ti = solvers::ti_solutions(params);
            const auto periodic = solvers::periodic_solutions(params);

            std::optional<gibbs::BoundaryField> field;
            for (const auto& nf : detail::solver_fields(params, ti, periodic))
                if (nf.name == field_name) field = nf.field;
            if (!field)
                throw Error(ErrorCode::FieldUnavailable,
                            "field " + field_name + " does not exist for this (p, J)");

            const auto profile = solvers::growth_profile(params, *field, max_depth);
            report.envelope["results"] = {{"field", field_name}, {"profile", detail::profile_json(profile)}};

            std::ostringstream text, csv;
            text << "growth profile for p=" << p << ", J=" << j << ", field " << field_name << "\n";
            text << "  n  log|mu(sigma*)|  log max|mu|  log|A_n|\n";
            csv << "n,star_exponent,max_exponent,level_growth\n";
            for (size_t i = 0; i < profile.star_exponents.size(); ++i) {
                text << "  " << (i + 1) << "  " << profile.star_exponents[i] << "  "
                     << profile.max_exponents[i] << "  " << profile.level_growth[i] << "\n";
                csv << (i + 1) << "," << profile.star_exponents[i] << "," << profile.max_exponents[i]
                    << "," << profile.level_growth[i] << "\n";
            }
            text << "  verdict: " << solvers::boundedness_name(profile.verdict) << "\n";
            report.text = text.str();
            report.csv = csv.str();
        } else if (cmd_sqrt->parsed()) {
            report.envelope = detail::make_envelope(
                "sqrt", json{{"p", p}, {"num", num}, {"den", den}, {"precision", precision}, {"format", format}});
            const PadicNumber x = from_rational(num, den, p, precision);
            const PadicNumber root = sqrt(x);
            report.envelope["results"] = {{"argument", detail::record_json(x)},
                                          {"root", detail::record_json(root)}};
            std::ostringstream text;
            text << "sqrt(" << num << "/" << den << ") in Q_" << p << " = " << to_string(root) << "\n";
            report.text = text.str();
        } else if (cmd_info->parsed()) {
            report.envelope = detail::make_envelope("info", json::object());
            report.envelope["results"] = {
                {"name", kToolName},
                {"version", kVersion},
                {"json_schema", kJsonSchemaVersion},
                {"defaults", {{"precision", kDefaultPrecision}, {"guard_digits", kGuardDigits}}},
                {"limits", {{"tree_depth", gibbs::kMaxTreeDepth}, {"partition_depth", gibbs::kMaxPartitionDepth}}},
                {"subcommands", {"classify", "verify", "table1", "growth", "sqrt", "info"}}};
            std::ostringstream text;
            text << kToolName << " " << kVersion << "\n"
                 << "defaults: precision " << kDefaultPrecision << ", guard " << kGuardDigits << "\n"
                 << "limits: tree depth " << gibbs::kMaxTreeDepth << ", exhaustive sums up to depth "
                 << gibbs::kMaxPartitionDepth << "\n";
            report.text = text.str();
        }
    } catch (const Error& e) {
        const int exit_code = e.code() == ErrorCode::InternalInconsistency ? 3 : 1;
        if (format == "json") {
            json envelope = report.envelope.is_null()
                                ? detail::make_envelope(app.get_subcommands().front()->get_name(), json::object())
                                : report.envelope;
            envelope["status"] = "error";
            envelope["error"] = {{"name", e.name()}, {"message", e.what()}};
            if (e.code() == ErrorCode::NotASquare)
                envelope["error"]["sub_reason"] = obstruction_name(e.obstruction());
            detail::emit(envelope.dump(2) + "\n", out_path, out);
        } else {
            err << "error: " << e.what() << "\n";
        }
        return exit_code;
    }

    if (format == "json")
        detail::emit(report.envelope.dump(2) + "\n", out_path, out);
    else if (format == "csv")
        detail::emit(report.csv, out_path, out);
    else
        detail::emit(report.text, out_path, out);
    return 0;
}

} // namespace padic::cli
