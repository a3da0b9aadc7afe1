#include "glaisher/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "glaisher/errors.hpp"

namespace glaisher {

namespace {

ConvergenceRecord to_record(const ConstantEstimate& e, std::int64_t budget) {
    ConvergenceRecord r;
    r.method = e.method;
    r.truncation_mode = e.truncation_mode;
    r.truncation_T = e.truncation_T;
    r.node_budget = budget;
    r.evaluations_used = e.evaluations;
    r.abs_error = std::fabs(e.ln_A - kLnAOracle);
    r.converged = e.converged;
    return r;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_no) {
    T value{};
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw DomainError("csv line " + std::to_string(line_no) + ": bad number '" + text + "'");
    }
    return value;
}

std::optional<TruncationMode> parse_mode(std::string_view text) {
    if (text == "truncate") return TruncationMode::truncate;
    if (text == "compactify") return TruncationMode::compactify;
    if (text == "auto") return TruncationMode::automatic;
    return std::nullopt;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

std::vector<ConvergenceRecord> sweep_truncation(Method method, std::span<const double> T_list,
                                                double tol, std::int64_t budget) {
    if (method != Method::binet && method != Method::malmsten) {
        throw DomainError("sweep_truncation supports the binet and malmsten routes only");
    }
    if (!std::is_sorted(T_list.begin(), T_list.end())) {
        throw DomainError("sweep_truncation expects T_list in ascending order");
    }
    std::vector<ConvergenceRecord> records;
    records.reserve(T_list.size());
    for (double T : T_list) {
        if (!(T >= 5.0 && T <= 500.0)) {
            throw DomainError("sweep_truncation T values must lie in [5, 500]");
        }
        EstimatorOptions options;
        options.max_evaluations = budget;
        options.policy = TruncationPolicy::truncate_at(T);
        options.policy.allow_tail_excess = true;
        records.push_back(to_record(estimate(method, tol, options), budget));
    }
    return records;
}

std::vector<ConvergenceRecord> sweep_nodes(Method method, std::span<const std::int64_t> budgets,
                                           TruncationPolicy policy, double tol) {
    if (!std::is_sorted(budgets.begin(), budgets.end())) {
        throw DomainError("sweep_nodes expects budgets in ascending order");
    }
    std::vector<ConvergenceRecord> records;
    records.reserve(budgets.size());
    for (std::int64_t budget : budgets) {
        if (budget < 32) {
            throw DomainError("sweep_nodes budgets must be at least 32 evaluations");
        }
        EstimatorOptions options;
        options.max_evaluations = budget;
        options.policy = policy;
        records.push_back(to_record(estimate(method, tol, options), budget));
    }
    return records;
}

std::optional<ConvergenceRecord> evaluations_to_reach(Method method, double target,
                                                      std::span<const std::int64_t> budgets,
                                                      TruncationPolicy policy) {
    for (const ConvergenceRecord& r : sweep_nodes(method, budgets, policy)) {
        if (r.abs_error <= target) return r;
    }
    return std::nullopt;
}

void emit_csv(std::span<const ConvergenceRecord> records, std::ostream& out) {
    if (records.empty()) {
        throw DomainError("emit_csv needs at least one record");
    }
    out << kConvergenceCsvHeader << '\n';
    for (const ConvergenceRecord& r : records) {
        out << to_string(r.method) << ',' << to_string(r.truncation_mode) << ','
            << format_double(r.truncation_T) << ',' << r.node_budget << ',' << r.evaluations_used
            << ',' << format_double(r.abs_error) << ',' << (r.converged ? "true" : "false") << '\n';
    }
}

void emit_csv(std::span<const ConvergenceRecord> records, const std::filesystem::path& path) {
    if (records.empty()) {
        throw DomainError("emit_csv needs at least one record");
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path.string() + "' for writing", path.string());
    }
    emit_csv(records, file);
    file.flush();
    if (!file) {
        throw IoError("failed writing '" + path.string() + "'", path.string());
    }
}

std::vector<ConvergenceRecord> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kConvergenceCsvHeader) {
        throw DomainError("csv header does not match the convergence schema");
    }
    std::vector<ConvergenceRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 7) {
            throw DomainError("csv line " + std::to_string(line_no) + ": expected 7 fields");
        }
        ConvergenceRecord r;
        const auto method = parse_method(f[0]);
        const auto mode = parse_mode(f[1]);
        if (!method || !mode || (f[6] != "true" && f[6] != "false")) {
            throw DomainError("csv line " + std::to_string(line_no) + ": bad enumerated field");
        }
        r.method = *method;
        r.truncation_mode = *mode;
        r.truncation_T = parse_number<double>(f[2], line_no);
        r.node_budget = parse_number<std::int64_t>(f[3], line_no);
        r.evaluations_used = parse_number<std::int64_t>(f[4], line_no);
        r.abs_error = parse_number<double>(f[5], line_no);
        r.converged = f[6] == "true";
        records.push_back(r);
    }
    return records;
}

}  // namespace glaisher
