#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "glaisher/glaisher.hpp"

namespace glaisher::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Node sweeps run at the tolerance floor so the budget, not the tolerance,
// is what ends each run.
constexpr double kNodeSweepTol = 1e-13;

constexpr double kBinetGrid[] = {0.25, 0.5, 1.0, 2.0, 5.0};
constexpr double kMalmstenGrid[] = {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
constexpr int kFormGridPoints = 1000;
constexpr double kFormGridLow = 1e-3;
constexpr double kFormGridHigh = 50.0;
constexpr double kFormTolerance = 1e-12;

std::string fmt(double value) { return format_double(value); }

Json to_json(const ConstantEstimate& e) {
    Json j;
    j["method"] = std::string(to_string(e.method));
    j["ln_A"] = e.ln_A;
    j["discretization_error"] = e.discretization_error;
    j["truncation_error"] = e.truncation_error;
    j["evaluations"] = e.evaluations;
    j["converged"] = e.converged;
    j["truncation_T"] = e.truncation_T;
    j["truncation_mode"] = std::string(to_string(e.truncation_mode));
    if (!e.converged) j["warning"] = "evaluation budget exhausted before reaching tolerance";
    return j;
}

Json to_json(const ConvergenceRecord& r) {
    Json j;
    j["method"] = std::string(to_string(r.method));
    j["truncation_mode"] = std::string(to_string(r.truncation_mode));
    j["truncation_T"] = r.truncation_T;
    j["node_budget"] = r.node_budget;
    j["evaluations_used"] = r.evaluations_used;
    j["abs_error"] = r.abs_error;
    j["converged"] = r.converged;
    return j;
}

constexpr std::string_view kEstimateCsvHeader = "method,ln_A,disc_err,trunc_err,evaluations,converged";

void write_estimate_csv_row(std::ostream& os, const ConstantEstimate& e) {
    os << to_string(e.method) << ',' << fmt(e.ln_A) << ',' << fmt(e.discretization_error) << ','
       << fmt(e.truncation_error) << ',' << e.evaluations << ',' << (e.converged ? "true" : "false")
       << '\n';
}

void write_estimate_text(std::ostream& os, const ConstantEstimate& e) {
    os << "method               " << to_string(e.method) << '\n'
       << "ln_A                 " << fmt(e.ln_A) << '\n'
       << "discretization_error " << fmt(e.discretization_error) << '\n'
       << "truncation_error     " << fmt(e.truncation_error) << '\n'
       << "evaluations          " << e.evaluations << '\n'
       << "converged            " << (e.converged ? "true" : "false") << '\n';
    if (!e.converged) os << "warning              evaluation budget exhausted before reaching tolerance\n";
}

// Sends the finished report to --output or to `out`.
void deliver(const CliConfig& config, const std::string& report, std::ostream& out) {
    if (!config.output_path) {
        out << report;
        return;
    }
    const std::filesystem::path& path = *config.output_path;
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path.string() + "' for writing", path.string());
    file << report;
    file.flush();
    if (!file) throw IoError("failed writing '" + path.string() + "'", path.string());
}

EstimatorOptions estimator_options(const CliConfig& config) {
    EstimatorOptions options;
    options.max_evaluations = config.max_evaluations;
    return options;
}

std::optional<Format> parse_format(std::string_view text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    return std::nullopt;
}

void validate(CliConfig& config) {
    if (!(config.tol >= Defaults::min_tol && config.tol <= Defaults::max_tol)) {
        throw UsageError("--tol must lie in [1e-13, 1e-3]");
    }
    if (config.max_evaluations < 15) {
        throw UsageError("--max-evals must be at least 15");
    }
    if (config.T_list.empty()) {
        config.T_list.assign(std::begin(Defaults::T_list), std::end(Defaults::T_list));
    }
    if (config.budgets.empty()) {
        config.budgets.assign(std::begin(Defaults::budgets), std::end(Defaults::budgets));
    }
    if (!std::is_sorted(config.T_list.begin(), config.T_list.end())) {
        throw UsageError("--t-list must be ascending");
    }
    for (double T : config.T_list) {
        if (!(T >= 5.0 && T <= 500.0)) throw UsageError("--t-list values must lie in [5, 500]");
    }
    if (!std::is_sorted(config.budgets.begin(), config.budgets.end())) {
        throw UsageError("--budgets must be ascending");
    }
    for (std::int64_t b : config.budgets) {
        if (b < 32) throw UsageError("--budgets values must be at least 32");
    }
}

// ---------------------------------------------------------------------------
// check suites

struct SuiteResult {
    std::string name;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool converged = true;

    bool passed() const { return max_residual <= threshold; }
};

SuiteResult suite_half_integral(const CliConfig& config) {
    SuiteResult s{"half_integral_residual", 0.0, 10.0 * config.tol, true};
    s.max_residual = std::fabs(identity_residual_eq4(config.tol, {}, estimator_options(config)));
    return s;
}

SuiteResult suite_binet(const CliConfig& config) {
    SuiteResult s{"binet_identity", 0.0, std::max(1e-9, 10.0 * config.tol), true};
    for (double x : kBinetGrid) {
        const QuadratureResult theta = binet_theta(x, config.tol, {config.max_evaluations});
        const double stirling = x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x);
        const double residual = std::fabs(theta.value - (log_gamma_plus_one(x) - stirling));
        s.max_residual = std::max(s.max_residual, residual);
        s.converged = s.converged && theta.converged;
    }
    return s;
}

SuiteResult suite_malmsten(const CliConfig& config) {
    SuiteResult s{"malmsten_identity", 0.0, std::max(1e-9, 10.0 * config.tol), true};
    for (double z : kMalmstenGrid) {
        const QuadratureResult q = malmsten_log_gamma(z, config.tol, {config.max_evaluations});
        s.max_residual = std::max(s.max_residual, std::fabs(q.value - log_gamma_plus_one(z)));
        s.converged = s.converged && q.converged;
    }
    return s;
}

double relative_gap(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

SuiteResult suite_forms() {
    SuiteResult s{"form_equivalence", 0.0, kFormTolerance, true};
    const double log_low = std::log(kFormGridLow);
    const double step = (std::log(kFormGridHigh) - log_low) / (kFormGridPoints - 1);
    for (int i = 0; i < kFormGridPoints; ++i) {
        const double t = i == kFormGridPoints - 1 ? kFormGridHigh : std::exp(log_low + i * step);
        s.max_residual = std::max(
            {s.max_residual,
             relative_gap(binet_integrand(t, BinetForm::form12), binet_integrand(t, BinetForm::form13)),
             relative_gap(malmsten_integrand(t, MalmstenForm::form18),
                          malmsten_integrand(t, MalmstenForm::form19))});
    }
    return s;
}

}  // namespace

int cmd_eval(const CliConfig& config, std::ostream& out, std::ostream&) {
    if (!config.method) throw UsageError("eval requires --method");
    const ConstantEstimate e = estimate(*config.method, config.tol, estimator_options(config));

    std::ostringstream report;
    switch (config.format) {
        case Format::text: write_estimate_text(report, e); break;
        case Format::json: report << to_json(e).dump(2) << '\n'; break;
        case Format::csv:
            report << kEstimateCsvHeader << '\n';
            write_estimate_csv_row(report, e);
            break;
    }
    deliver(config, report.str(), out);
    return e.converged ? kExitOk : kExitNotConverged;
}

int cmd_compare(const CliConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<ConstantEstimate> rows;
    for (Method m : kIntegralMethods) rows.push_back(estimate(m, config.tol, estimator_options(config)));

    double spread = 0.0;
    bool all_converged = true;
    for (const ConstantEstimate& a : rows) {
        all_converged = all_converged && a.converged;
        for (const ConstantEstimate& b : rows) spread = std::max(spread, std::fabs(a.ln_A - b.ln_A));
    }
    const double allowed = 4.0 * config.tol;

    std::ostringstream report;
    switch (config.format) {
        case Format::text:
            report << "method          ln_A                    disc_err     trunc_err    evals  converged\n";
            for (const ConstantEstimate& e : rows) {
                char line[160];
                std::snprintf(line, sizeof line, "%-15s %-23s %-12.3e %-12.3e %-6lld %s\n",
                              std::string(to_string(e.method)).c_str(), fmt(e.ln_A).c_str(),
                              e.discretization_error, e.truncation_error,
                              static_cast<long long>(e.evaluations), e.converged ? "true" : "false");
                report << line;
            }
            report << "max pairwise spread " << fmt(spread) << " (allowed " << fmt(allowed) << ")\n";
            break;
        case Format::json: {
            Json array = Json::array();
            for (const ConstantEstimate& e : rows) array.push_back(to_json(e));
            report << array.dump(2) << '\n';
            break;
        }
        case Format::csv:
            report << kEstimateCsvHeader << '\n';
            for (const ConstantEstimate& e : rows) write_estimate_csv_row(report, e);
            break;
    }
    deliver(config, report.str(), out);
    if (config.format != Format::text) {
        err << "max pairwise spread " << fmt(spread) << " (allowed " << fmt(allowed) << ")\n";
    }
    if (!all_converged) return kExitNotConverged;
    return spread <= allowed ? kExitOk : kExitCheckFailed;
}

int cmd_check(const CliConfig& config, std::ostream& out, std::ostream&) {
    const std::vector<SuiteResult> suites = {suite_half_integral(config), suite_binet(config),
                                             suite_malmsten(config), suite_forms()};
    std::ostringstream report;
    switch (config.format) {
        case Format::text:
            for (const SuiteResult& s : suites) {
                char line[160];
                std::snprintf(line, sizeof line, "%-22s max_residual %-10.3e threshold %-10.3e %s\n",
                              s.name.c_str(), s.max_residual, s.threshold,
                              s.passed() ? "pass" : "FAIL");
                report << line;
            }
            break;
        case Format::json: {
            Json array = Json::array();
            for (const SuiteResult& s : suites) {
                Json j;
                j["suite"] = s.name;
                j["max_residual"] = s.max_residual;
                j["threshold"] = s.threshold;
                j["passed"] = s.passed();
                j["converged"] = s.converged;
                array.push_back(j);
            }
            report << array.dump(2) << '\n';
            break;
        }
        case Format::csv:
            report << "suite,max_residual,threshold,passed,converged\n";
            for (const SuiteResult& s : suites) {
                report << s.name << ',' << fmt(s.max_residual) << ',' << fmt(s.threshold) << ','
                       << (s.passed() ? "true" : "false") << ',' << (s.converged ? "true" : "false")
                       << '\n';
            }
            break;
    }
    deliver(config, report.str(), out);

    const bool passed = std::all_of(suites.begin(), suites.end(), [](auto& s) { return s.passed(); });
    const bool converged =
        std::all_of(suites.begin(), suites.end(), [](auto& s) { return s.converged; });
    if (!passed) return kExitCheckFailed;
    return converged ? kExitOk : kExitNotConverged;
}

int cmd_convergence(const CliConfig& config, std::ostream& out, std::ostream&) {
    std::vector<ConvergenceRecord> records;
    const auto append = [&records](std::vector<ConvergenceRecord> more) {
        records.insert(records.end(), more.begin(), more.end());
    };
    for (Method m : {Method::binet, Method::malmsten}) {
        append(sweep_truncation(m, config.T_list, config.tol, config.max_evaluations));
    }
    for (Method m : kIntegralMethods) {
        append(sweep_nodes(m, config.budgets, TruncationPolicy::automatic(), kNodeSweepTol));
    }
    append(sweep_nodes(Method::binet, config.budgets, TruncationPolicy::truncate_auto(), kNodeSweepTol));

    std::ostringstream report;
    if (config.format == Format::json) {
        Json array = Json::array();
        for (const ConvergenceRecord& r : records) array.push_back(to_json(r));
        report << array.dump(2) << '\n';
    } else {
        emit_csv(records, report);
    }
    deliver(config, report.str(), out);
    return kExitOk;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Glaisher-Kinkelin constant: estimation, identity checks and convergence tables",
                 "glaisher"};
    app.require_subcommand(1);

    CliConfig config;
    std::string method_name;
    std::string format_name = "text";
    std::string output;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--tol", config.tol, "Absolute tolerance on ln A, in [1e-13, 1e-3]")
            ->capture_default_str();
        sub->add_option("--format", format_name, "Output format: text, json or csv")
            ->capture_default_str();
        sub->add_option("--output", output, "Write the report to this file instead of stdout");
        sub->add_option("--max-evals", config.max_evaluations, "Integrand evaluation budget per integral")
            ->capture_default_str();
    };

    CLI::App* eval = app.add_subcommand("eval", "Estimate ln A with one method");
    common(eval);
    eval->add_option("--method", method_name,
                     "classical, binet, malmsten, direct_lgamma or limit_sequence")
        ->required();
    CLI::App* compare = app.add_subcommand("compare", "Run all four integral routes and compare");
    common(compare);
    CLI::App* check = app.add_subcommand("check", "Run the identity and form-equivalence suites");
    common(check);
    CLI::App* convergence = app.add_subcommand("convergence", "Error versus cost tables as CSV");
    common(convergence);
    convergence->add_option("--t-list", config.T_list, "Truncation points, ascending, in [5, 500]")
        ->delimiter(',');
    convergence->add_option("--budgets", config.budgets, "Evaluation budgets, ascending, each >= 32")
        ->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) config.command = Command::eval;
        if (compare->parsed()) config.command = Command::compare;
        if (check->parsed()) config.command = Command::check;
        if (convergence->parsed()) config.command = Command::convergence;

        if (!method_name.empty()) {
            config.method = parse_method(method_name);
            if (!config.method) throw UsageError("unknown method '" + method_name + "'");
        }
        const auto format = parse_format(format_name);
        if (!format) throw UsageError("unknown format '" + format_name + "'");
        config.format = *format;
        if (!output.empty()) config.output_path = output;
        validate(config);

        switch (config.command) {
            case Command::eval: return cmd_eval(config, out, err);
            case Command::compare: return cmd_compare(config, out, err);
            case Command::check: return cmd_check(config, out, err);
            case Command::convergence: return cmd_convergence(config, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nRun with --help for more information.\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitSoftware;
    }
    return kExitSoftware;
}

}  // namespace glaisher::cli
