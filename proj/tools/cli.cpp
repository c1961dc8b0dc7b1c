#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "pcrank/pcrank.hpp"

namespace pcrank::cli {

namespace {

struct InputError {
    std::string message;
};

std::string precise(double v) {
    std::ostringstream out;
    out << std::setprecision(17) << v;
    return out.str();
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Gm: return "gm";
        case Method::Lls: return "lls";
        case Method::Harker: return "harker";
    }
    return "unknown";
}

PCMatrix load(const CliConfig& config, std::istream& in) {
    try {
        if (config.input == "-") {
            PCMatrix m = parse_matrix(in);
            return config.repair_reciprocal ? repair_reciprocal(m) : m;
        }
        std::ifstream file(config.input);
        if (!file) throw InputError{"cannot open '" + config.input + "'"};
        PCMatrix m = parse_matrix(file);
        return config.repair_reciprocal ? repair_reciprocal(m) : m;
    } catch (const SyntaxError& e) {
        throw InputError{std::string("syntax error: ") + e.what()};
    } catch (const ShapeError& e) {
        throw InputError{std::string("shape error: ") + e.what()};
    } catch (const ValueError& e) {
        throw InputError{std::string("value error: ") + e.what()};
    }
}

std::string describe_components(const std::vector<std::vector<std::size_t>>& components,
                                const std::vector<std::string>& labels) {
    std::string out = "disconnected comparison graph: components ";
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (c > 0) out += ',';
        out += '{';
        for (std::size_t k = 0; k < components[c].size(); ++k) {
            if (k > 0) out += ',';
            out += labels[components[c][k]];
        }
        out += '}';
    }
    return out;
}

std::string describe(const Violation& v, const ValidationReport& report, const PCMatrix& m) {
    std::ostringstream out;
    out << to_string(v.kind);
    switch (v.kind) {
        case ViolationKind::Disconnected:
            out << ": " << describe_components(report.components, m.labels());
            break;
        case ViolationKind::RowAllMissing:
        case ViolationKind::DiagonalNotOne:
            out << " (" << v.i + 1 << "): " << v.detail;
            break;
        default:
            out << " (" << v.i + 1 << "," << v.j + 1 << "): " << v.detail;
            break;
    }
    return out.str();
}

/// Prints violations to err and returns false when the matrix cannot be ranked.
bool check(const PCMatrix& m, const CliConfig& config, std::ostream& err) {
    const ValidationReport report = validate(m, config.tolerance);
    if (report.ok()) return true;
    err << "error: invalid comparison matrix\n";
    for (const Violation& v : report.violations) err << "  " << describe(v, report, m) << '\n';
    return false;
}

std::string ranking_groups_json(const OrdinalRanking& ranking) {
    std::string out = "[";
    for (std::size_t g = 0; g < ranking.groups.size(); ++g) {
        if (g > 0) out += ',';
        out += '[';
        for (std::size_t k = 0; k < ranking.groups[g].size(); ++k) {
            if (k > 0) out += ',';
            out += std::to_string(ranking.groups[g][k]);
        }
        out += ']';
    }
    return out + "]";
}

std::string weights_json(const PriorityVector& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ',';
        out += precise(w[i]);
    }
    return out + "]";
}

std::string labels_json(const std::vector<std::string>& labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ',';
        out += json_string(labels[i]);
    }
    return out + "]";
}

// Body of a method record without the enclosing braces.
std::string method_fields_json(const MethodReport& r, const PCMatrix& m) {
    std::string out = "\"method\":" + json_string(r.method);
    if (!r.ok()) return out + ",\"error\":" + json_string(r.error);
    out += ",\"normalization\":" + json_string(std::string(to_string(r.weights->normalization())));
    out += ",\"weights\":" + weights_json(*r.weights);
    out += ",\"s_star\":" + precise(r.s_star);
    out += ",\"ranking\":" + json_string(format_ranking(r.ranking, m.labels()));
    out += ",\"ranking_groups\":" + ranking_groups_json(r.ranking);
    out += ",\"diagnostics\":{";
    bool first = true;
    for (const auto& [key, value] : r.diagnostics) {
        if (!first) out += ',';
        first = false;
        out += json_string(key) + ":" + precise(value);
    }
    return out + "}";
}

MethodReport run_method(Method method, const PCMatrix& m, const CliConfig& config) {
    MethodReport report;
    report.method = std::string(method_name(method));
    try {
        switch (method) {
            case Method::Gm:
                report = make_report(report.method, m, rank_gm(m, config.normalization, config.tolerance));
                break;
            case Method::Lls:
                report = make_report(report.method, m, rank_lls(m, config.normalization, 0, config.tolerance));
                break;
            case Method::Harker: {
                HarkerSolution sol = solve_harker(m, config.normalization, {}, config.tolerance);
                report = make_report(report.method, m, std::move(sol.weights));
                report.diagnostics["lambda_max"] = sol.lambda_max;
                report.diagnostics["iterations"] = static_cast<double>(sol.iterations);
                report.diagnostics["residual"] = sol.residual;
                break;
            }
        }
    } catch (const NoConvergence& e) {
        report.error = e.what();
        report.diagnostics["iterations"] = static_cast<double>(e.iterations());
    }
    return report;
}

void print_weights_plain(const PriorityVector& w, const std::vector<std::string>& labels, std::ostream& out) {
    std::size_t width = 0;
    for (const auto& l : labels) width = std::max(width, l.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << labels[i] << std::right << "  "
            << std::fixed << std::setprecision(4) << w[i] << '\n';
    }
    out << std::defaultfloat;
}

// Wraps a command body with the error-to-exit-status mapping.
int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.message << '\n';
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace

int cmd_validate(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const PCMatrix m = load(config, in);
            const ValidationReport report = validate(m, config.tolerance);
            const std::size_t total_pairs = m.size() * (m.size() - 1) / 2;
            if (config.format == OutputFormat::Structured) {
                std::string rec = "{\"command\":\"validate\",\"ok\":";
                rec += report.ok() ? "true" : "false";
                rec += ",\"n\":" + std::to_string(m.size());
                rec += ",\"present_pairs\":" + std::to_string(report.present_pairs);
                rec += ",\"total_pairs\":" + std::to_string(total_pairs);
                rec += ",\"violations\":[";
                for (std::size_t k = 0; k < report.violations.size(); ++k) {
                    const Violation& v = report.violations[k];
                    if (k > 0) rec += ',';
                    rec += "{\"kind\":" + json_string(std::string(to_string(v.kind))) + ",\"i\":" +
                           std::to_string(v.i + 1) + ",\"j\":" + std::to_string(v.j + 1) +
                           ",\"detail\":" + json_string(describe(v, report, m)) + "}";
                }
                out << rec << "]}\n";
            } else if (report.ok()) {
                out << "OK: reciprocal, connected, " << report.present_pairs << " of " << total_pairs
                    << " comparisons present\n";
            } else {
                for (const Violation& v : report.violations) out << describe(v, report, m) << '\n';
            }
            return report.ok() ? kExitOk : kExitDomain;
        },
        err);
}

int cmd_rank(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const PCMatrix m = load(config, in);
            if (!check(m, config, err)) return kExitDomain;
            const MethodReport r = run_method(config.method, m, config);
            if (!r.ok()) {
                err << "error: " << r.method << ": " << r.error << '\n';
                return kExitDomain;
            }
            if (config.format == OutputFormat::Structured) {
                out << "{\"command\":\"rank\",\"labels\":" << labels_json(m.labels()) << ','
                    << method_fields_json(r, m) << "}\n";
                return kExitOk;
            }
            out << "method: " << r.method << " (normalization: " << to_string(config.normalization) << ")\n";
            print_weights_plain(*r.weights, m.labels(), out);
            out << "ranking: " << format_ranking(r.ranking, m.labels()) << '\n';
            out << "S*(C): " << std::setprecision(6) << r.s_star << '\n';
            for (const auto& [key, value] : r.diagnostics) out << key << ": " << value << '\n';
            return kExitOk;
        },
        err);
}

int cmd_complete(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const PCMatrix m = load(config, in);
            if (!check(m, config, err)) return kExitDomain;
            out << serialize_matrix(complete_matrix(m, config.tolerance));
            return kExitOk;
        },
        err);
}

int cmd_compare(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const PCMatrix m = load(config, in);
            if (!check(m, config, err)) return kExitDomain;

            std::vector<MethodReport> reports;
            for (Method method : {Method::Gm, Method::Lls, Method::Harker}) {
                reports.push_back(run_method(method, m, config));
            }

            struct Pairwise {
                std::string a, b;
                RankingComparison cmp;
            };
            std::vector<Pairwise> pairs;
            for (std::size_t x = 0; x < reports.size(); ++x) {
                for (std::size_t y = x + 1; y < reports.size(); ++y) {
                    if (!reports[x].ok() || !reports[y].ok()) continue;
                    pairs.push_back({reports[x].method, reports[y].method,
                                     compare_rankings(reports[x].weights->renormalized(Normalization::SumToOne),
                                                      reports[y].weights->renormalized(Normalization::SumToOne))});
                }
            }

            if (config.format == OutputFormat::Structured) {
                std::string rec = "{\"command\":\"compare\",\"labels\":" + labels_json(m.labels()) + ",\"methods\":[";
                for (std::size_t k = 0; k < reports.size(); ++k) {
                    if (k > 0) rec += ',';
                    rec += "{" + method_fields_json(reports[k], m) + "}";
                }
                rec += "],\"pairwise\":[";
                for (std::size_t k = 0; k < pairs.size(); ++k) {
                    if (k > 0) rec += ',';
                    rec += "{\"a\":" + json_string(pairs[k].a) + ",\"b\":" + json_string(pairs[k].b) +
                           ",\"max_abs_diff\":" + precise(pairs[k].cmp.max_abs_diff) +
                           ",\"ordinal_equal\":" + (pairs[k].cmp.ordinal_equal ? "true" : "false") + "}";
                }
                out << rec << "]}\n";
            } else {
                for (const MethodReport& r : reports) {
                    out << "[" << r.method << "]\n";
                    if (!r.ok()) {
                        out << "  failed: " << r.error << '\n';
                        continue;
                    }
                    print_weights_plain(*r.weights, m.labels(), out);
                    out << "  ranking: " << format_ranking(r.ranking, m.labels()) << '\n';
                    out << "  S*(C): " << std::setprecision(6) << r.s_star << '\n';
                    for (const auto& [key, value] : r.diagnostics) out << "  " << key << ": " << value << '\n';
                }
                for (const Pairwise& p : pairs) {
                    out << "max |" << p.a << " - " << p.b << "| = " << std::setprecision(3) << p.cmp.max_abs_diff
                        << ", same order: " << (p.cmp.ordinal_equal ? "yes" : "no") << '\n';
                }
            }
            const bool any_ok = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
            return any_ok ? kExitOk : kExitDomain;
        },
        err);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Priority vectors from incomplete pairwise-comparison matrices", "pcrank"};
    app.require_subcommand(1);

    CliConfig config;
    std::string method = "gm";
    std::string normalize = "sum";
    std::string format = "plain";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--normalize", normalize, "Weight normalization")
            ->check(CLI::IsMember({"sum", "max", "none"}));
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "structured"}));
        sub->add_option("--tol", config.tolerance, "Relative reciprocity tolerance (0 = strict)")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--repair-reciprocal", config.repair_reciprocal,
                      "Fill a one-sided ? at (j,i) with 1/c_ij before validating");
        sub->add_option("input", config.input, "Matrix file, or - for standard input")->required();
    };

    CLI::App* rank = app.add_subcommand("rank", "Compute a priority vector");
    rank->add_option("--method", method, "Ranking method")->check(CLI::IsMember({"gm", "lls", "harker"}));
    add_common(rank);
    CLI::App* validate_cmd = app.add_subcommand("validate", "Check reciprocity and connectivity");
    add_common(validate_cmd);
    CLI::App* complete = app.add_subcommand("complete", "Fill missing comparisons with weight ratios");
    add_common(complete);
    CLI::App* compare = app.add_subcommand("compare", "Run gm, lls and harker side by side");
    add_common(compare);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        for (const CLI::App* sub : {rank, validate_cmd, complete, compare}) {
            if (sub->parsed()) {
                out << sub->help();
                return kExitOk;
            }
        }
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitInput;
    }

    config.method = method == "lls" ? Method::Lls : method == "harker" ? Method::Harker : Method::Gm;
    config.normalization = *parse_normalization(normalize);
    config.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Plain;

    if (rank->parsed()) return cmd_rank(config, in, out, err);
    if (validate_cmd->parsed()) {
        config.command = Command::Validate;
        return cmd_validate(config, in, out, err);
    }
    if (complete->parsed()) {
        config.command = Command::Complete;
        return cmd_complete(config, in, out, err);
    }
    config.command = Command::Compare;
    return cmd_compare(config, in, out, err);
}

}  // namespace pcrank::cli
