#pragma once

// Command-line front end: argument parsing into a CliConfig and execution of
// a parsed config against output streams.
//
//   arithmos classify <n>
//   arithmos prove <n> [--degree 2|3] [--verify] [--bound B]
//   arithmos table --max N [--format text|json|csv] [--verify]
//   arithmos x9 <a> <b> [--verify] [--bound B]
//   arithmos audit <a> <b> [--verify] [--bound B]
//   arithmos oracle root <n> [--degree 2|3] [--bound B]
//   arithmos oracle ratio <a> <b> [--bound B]
//
// Global: --format text|json|csv, --output PATH.
// Exit status: 0 success, 2 invalid arguments, 1 internal contract violation.

#include "format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace arithmos::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitContract = 1;
inline constexpr int kExitUsage = 2;

enum class Command { classify, prove, table, x9, audit, oracle_root, oracle_ratio };

struct CliConfig {
    Command command = Command::classify;
    std::vector<Natural> numbers;
    Degree degree = Degree::square;
    std::optional<Natural> bound; ///< oracle bound; defaults per command
    std::optional<Natural> max;
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> output_path;
    bool verify = false;
};

/// Parsing stopped before a config was produced (help, or a usage error).
struct EarlyExit {
    int code;
    std::string out;
    std::string err;
};

namespace detail {

inline Natural parse_natural_arg(const std::string& token, std::string_view what)
{
    try {
        return Natural::parse(token);
    } catch (const NotANatural&) {
        throw CLI::ValidationError(std::string(what), "invalid value '" + token + "', expected a natural number >= 1");
    }
}

} // namespace detail

inline std::variant<CliConfig, EarlyExit> parse_args(const std::vector<std::string>& args)
{
    CLI::App app{"Exact Book VII arithmetic: square/oblong partition, root rationality proofs, "
                 "commensurability of square roots",
                 "arithmos"};
    app.require_subcommand(1);

    std::string format_text = "text";
    std::string output_path;
    app.add_option("--format", format_text, "Output format: text, json or csv");
    app.add_option("--output", output_path, "Write output to PATH instead of stdout");

    std::string n_text;
    std::string a_text;
    std::string b_text;
    std::string max_text;
    std::string bound_text;
    int degree = 2;
    bool verify = false;

    auto add_degree = [&](CLI::App* sub) { sub->add_option("--degree", degree, "Root degree, 2 or 3"); };
    auto add_bound = [&](CLI::App* sub) { sub->add_option("--bound", bound_text, "Oracle search bound"); };

    auto* classify = app.add_subcommand("classify", "Plane and solid class, figures and factorizations of n");
    classify->add_option("n", n_text)->required();

    auto* prove = app.add_subcommand("prove", "Decide whether the root of n is rational, with proof trace");
    prove->add_option("n", n_text)->required();
    add_degree(prove);
    add_bound(prove);
    prove->add_flag("--verify", verify, "Cross-check the verdict against the brute-force oracle");

    auto* table = app.add_subcommand("table", "Classification table for 1..max");
    table->add_option("--max", max_text, "Largest integer in the table")->required();
    table->add_flag("--verify", verify, "Cross-check every line kind against the oracle");
    add_bound(table);

    auto* x9 = app.add_subcommand("x9", "Commensurability of sqrt(a) and sqrt(b)");
    x9->add_option("a", a_text)->required();
    x9->add_option("b", b_text)->required();
    add_bound(x9);
    x9->add_flag("--verify", verify, "Cross-check against the brute-force oracle");

    auto* audit = app.add_subcommand("audit", "Length/power kinds of sqrt(a), sqrt(b) and the partition gap");
    audit->add_option("a", a_text)->required();
    audit->add_option("b", b_text)->required();
    add_bound(audit);
    audit->add_flag("--verify", verify, "Cross-check against the brute-force oracles");

    auto* oracle = app.add_subcommand("oracle", "Raw brute-force oracle access");
    oracle->require_subcommand(1);
    auto* oracle_root = oracle->add_subcommand("root", "Search p/q with p^e = n*q^e, q <= bound");
    oracle_root->add_option("n", n_text)->required();
    add_degree(oracle_root);
    add_bound(oracle_root);
    auto* oracle_ratio = oracle->add_subcommand("ratio", "Search p, q <= bound with a*q^2 = b*p^2");
    oracle_ratio->add_option("a", a_text)->required();
    oracle_ratio->add_option("b", b_text)->required();
    add_bound(oracle_ratio);

    // Global options may follow the subcommand.
    for (auto* sub : {classify, prove, table, x9, audit, oracle, oracle_root, oracle_ratio}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::ostringstream out;
    std::ostringstream err;
    try {
        app.parse(reversed);

        CliConfig cfg;
        const auto fmt = output_format_from(format_text);
        if (!fmt) {
            throw CLI::ValidationError("--format", "invalid value '" + format_text + "', expected text, json or csv");
        }
        cfg.format = *fmt;
        if (!output_path.empty()) {
            cfg.output_path = output_path;
        }
        const auto deg = degree_from(degree);
        if (!deg) {
            throw CLI::ValidationError("--degree", "invalid value '" + std::to_string(degree) + "', expected 2 or 3");
        }
        cfg.degree = *deg;
        cfg.verify = verify;
        if (!bound_text.empty()) {
            cfg.bound = detail::parse_natural_arg(bound_text, "--bound");
        }

        using detail::parse_natural_arg;
        if (classify->parsed()) {
            cfg.command = Command::classify;
            cfg.numbers = {parse_natural_arg(n_text, "n")};
        } else if (prove->parsed()) {
            cfg.command = Command::prove;
            cfg.numbers = {parse_natural_arg(n_text, "n")};
        } else if (table->parsed()) {
            cfg.command = Command::table;
            cfg.max = parse_natural_arg(max_text, "--max");
        } else if (x9->parsed()) {
            cfg.command = Command::x9;
            cfg.numbers = {parse_natural_arg(a_text, "a"), parse_natural_arg(b_text, "b")};
        } else if (audit->parsed()) {
            cfg.command = Command::audit;
            cfg.numbers = {parse_natural_arg(a_text, "a"), parse_natural_arg(b_text, "b")};
        } else if (oracle_root->parsed()) {
            cfg.command = Command::oracle_root;
            cfg.numbers = {parse_natural_arg(n_text, "n")};
        } else {
            cfg.command = Command::oracle_ratio;
            cfg.numbers = {parse_natural_arg(a_text, "a"), parse_natural_arg(b_text, "b")};
        }
        if (cfg.format == OutputFormat::csv && cfg.command != Command::table) {
            throw CLI::ValidationError("--format", "csv output is only available for the table command");
        }
        return cfg;
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return EarlyExit{kExitOk, out.str(), err.str()};
    } catch (const CLI::Error& e) {
        if (app.get_subcommands().empty()) {
            // CLI11 reports only "a subcommand is required"; name the token it skipped.
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (args[i] == "--format" || args[i] == "--output") {
                    ++i;
                } else if (!args[i].starts_with("-")) {
                    err << "error: unknown command '" << args[i] << "'\n";
                    err << "run with --help for usage\n";
                    return EarlyExit{kExitUsage, out.str(), err.str()};
                }
            }
        }
        err << "error: " << e.what() << '\n';
        err << "run with --help for usage\n";
        return EarlyExit{kExitUsage, out.str(), err.str()};
    }
}

// ---------------------------------------------------------------------------
// Oracle cross-checks (--verify)
// ---------------------------------------------------------------------------

/// Throws ContractViolation when the oracle contradicts the verdict. An empty
/// oracle result contradicts "rational" only because a rational-integer root
/// always has the witness q = 1, inside every bound.
inline void check_rationality(const Surd& s, const RationalityVerdict& v, const OracleResult& o)
{
    if (is_rational(v) != o.found.has_value()) {
        throw ContractViolation("decision says " + surd_text(s) + " is " + verdict_name(v) + " but the oracle "
                                + (o.found ? "found p=" + o.found->p.to_string() + " q=" + o.found->q.to_string()
                                           : "found no witness up to q = " + o.search_bound.to_string()));
    }
}

/// Throws ContractViolation when the oracle contradicts the verdict. A
/// commensurable ratio whose terms exceed the bound cannot be contradicted by
/// an empty search.
inline void check_commensurability(const Natural& a, const Natural& b, const CommensurabilityVerdict& v,
                                   const OracleResult& o)
{
    const std::string pair = "sqrt(" + a.to_string() + ") : sqrt(" + b.to_string() + ")";
    if (const auto* c = std::get_if<Commensurable>(&v)) {
        if (o.found) {
            if (!(Ratio{o.found->p, o.found->q} == c->ratio)) {
                throw ContractViolation("decision gives " + pair + " = " + c->ratio.to_string() + " but the oracle found "
                                        + o.found->p.to_string() + "/" + o.found->q.to_string());
            }
        } else if (c->ratio.num <= o.search_bound && c->ratio.den <= o.search_bound) {
            throw ContractViolation("decision gives " + pair + " = " + c->ratio.to_string()
                                    + " but the oracle found no witness up to " + o.search_bound.to_string());
        }
    } else if (o.found) {
        throw ContractViolation("decision says " + pair + " is incommensurable but the oracle found p="
                                + o.found->p.to_string() + " q=" + o.found->q.to_string());
    }
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

/// Runs `body`, mapping escaped exceptions to exit statuses.
inline int guarded(const std::function<int()>& body, std::ostream& err)
{
    try {
        return body();
    } catch (const ContractViolation& e) {
        err << "internal contract violation: " << e.what() << '\n';
        return kExitContract;
    } catch (const NotANatural& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

namespace detail {

inline std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

inline std::string render(const CliConfig& cfg)
{
    const bool json = cfg.format == OutputFormat::json;
    const auto& args = cfg.numbers;
    switch (cfg.command) {
    case Command::classify:
        return json ? dump(classify_json(args[0])) : classify_text(args[0]);

    case Command::prove: {
        const Surd s{args[0], cfg.degree};
        const RationalityVerdict v = decide_rationality(s);
        const ProofTrace trace = build_trace(s);
        std::optional<OracleResult> o;
        if (cfg.verify) {
            o = oracle_root_rational(s.radicand, s.degree, cfg.bound.value_or(Natural(kDefaultRootBound)));
            check_rationality(s, v, *o);
        }
        if (json) {
            auto j = to_json(trace);
            if (o) {
                j["oracle"] = oracle_json(*o);
            }
            return dump(j);
        }
        std::string text = surd_text(s) + ": " + verdict_name(v) + "\n" + to_text(trace);
        if (o) {
            text += "oracle: " + oracle_text(*o);
        }
        return text;
    }

    case Command::table: {
        const ClassificationTable t = classification_table(*cfg.max);
        if (cfg.verify) {
            const Natural bound = cfg.bound.value_or(Natural(kDefaultRootBound));
            for (const auto& row : t.rows) {
                const Surd s{row.n, Degree::square};
                check_rationality(s, decide_rationality(s), oracle_root_rational(row.n, Degree::square, bound));
            }
        }
        switch (cfg.format) {
        case OutputFormat::csv: return table_csv(t);
        case OutputFormat::json: return dump(table_json(t));
        case OutputFormat::text: break;
        }
        return table_text(t);
    }

    case Command::x9: {
        const CommensurabilityVerdict v = surd_ratio_commensurable(args[0], args[1]);
        std::optional<OracleResult> o;
        if (cfg.verify) {
            o = oracle_surd_ratio(args[0], args[1], cfg.bound.value_or(Natural(kDefaultRatioBound)));
            check_commensurability(args[0], args[1], v, *o);
        }
        if (json) {
            auto j = commensurability_json(v);
            j["a"] = args[0].to_string();
            j["b"] = args[1].to_string();
            if (o) {
                j["oracle"] = oracle_json(*o);
            }
            return dump(j);
        }
        std::string text = commensurability_text(args[0], args[1], v);
        if (o) {
            text += "oracle: " + oracle_text(*o);
        }
        return text;
    }

    case Command::audit: {
        const AuditReport r = partition_audit(args[0], args[1]);
        std::optional<OracleResult> o;
        if (cfg.verify) {
            const Natural root_bound = cfg.bound.value_or(Natural(kDefaultRootBound));
            for (const Natural& x : args) {
                const Surd s{x, Degree::square};
                check_rationality(s, decide_rationality(s), oracle_root_rational(x, Degree::square, root_bound));
            }
            o = oracle_surd_ratio(args[0], args[1], cfg.bound.value_or(Natural(kDefaultRatioBound)));
            check_commensurability(args[0], args[1], r.relation, *o);
        }
        if (json) {
            auto j = audit_json(r);
            if (o) {
                j["oracle"] = oracle_json(*o);
            }
            return dump(j);
        }
        std::string text = audit_text(r);
        if (o) {
            text += "oracle: " + oracle_text(*o);
        }
        return text;
    }

    case Command::oracle_root: {
        const auto o = oracle_root_rational(args[0], cfg.degree, cfg.bound.value_or(Natural(kDefaultRootBound)));
        return json ? dump(oracle_json(o)) : oracle_text(o);
    }

    case Command::oracle_ratio: {
        const auto o = oracle_surd_ratio(args[0], args[1], cfg.bound.value_or(Natural(kDefaultRatioBound)));
        return json ? dump(oracle_json(o)) : oracle_text(o);
    }
    }
    throw ContractViolation("unhandled command");
}

} // namespace detail

inline int run_cli(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    return guarded(
        [&] {
            const std::string text = detail::render(cfg);
            if (cfg.output_path) {
                std::ofstream file(*cfg.output_path, std::ios::binary);
                if (!file || !(file << text)) {
                    err << "error: cannot write '" << *cfg.output_path << "'\n";
                    return kExitUsage;
                }
                return kExitOk;
            }
            out << text;
            return kExitOk;
        },
        err);
}

/// Parses and runs; `args` excludes the program name.
inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    auto parsed = parse_args(args);
    if (auto* early = std::get_if<EarlyExit>(&parsed)) {
        out << early->out;
        err << early->err;
        return early->code;
    }
    return run_cli(std::get<CliConfig>(parsed), out, err);
}

} // namespace arithmos::cli
