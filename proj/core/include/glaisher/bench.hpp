#ifndef GLAISHER_BENCH_HPP
#define GLAISHER_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glaisher/estimator.hpp"

namespace glaisher {

/// One row of a convergence table. abs_error is measured against kLnAOracle.
struct ConvergenceRecord {
    Method method = Method::binet;
    TruncationMode truncation_mode = TruncationMode::truncate;
    double truncation_T = 0.0;
    std::int64_t node_budget = 0;
    std::int64_t evaluations_used = 0;
    double abs_error = 0.0;
    bool converged = false;

    bool operator==(const ConvergenceRecord&) const = default;
};

inline constexpr std::string_view kConvergenceCsvHeader =
    "method,truncation_mode,truncation_T,node_budget,evaluations_used,abs_error,converged";

/// Truncates the Binet or Malmsten integral at each T (ascending, within
/// [5, 500]) without compactification, so abs_error exposes the tail.
/// tol is the discretization tolerance on ln A.
std::vector<ConvergenceRecord> sweep_truncation(Method method, std::span<const double> T_list,
                                                double tol,
                                                std::int64_t budget = kDefaultEvaluationBudget);

/// Runs `method` at tolerance tol under each evaluation budget (ascending,
/// each >= 32). Budget exhaustion is recorded as converged = false.
std::vector<ConvergenceRecord> sweep_nodes(Method method, std::span<const std::int64_t> budgets,
                                           TruncationPolicy policy = TruncationPolicy::automatic(),
                                           double tol = 1e-13);

/// First record of sweep_nodes reaching abs_error <= target, if any.
std::optional<ConvergenceRecord> evaluations_to_reach(Method method, double target,
                                                      std::span<const std::int64_t> budgets,
                                                      TruncationPolicy policy);

/// Writes header plus one row per record, in input order. Floats use the
/// shortest decimal that round-trips. Throws DomainError on an empty list.
void emit_csv(std::span<const ConvergenceRecord> records, std::ostream& out);

/// As above, to a file. Nothing is created for an empty list; open or write
/// failures throw IoError carrying the path.
void emit_csv(std::span<const ConvergenceRecord> records, const std::filesystem::path& path);

/// Inverse of emit_csv. Throws DomainError on a malformed header or row.
std::vector<ConvergenceRecord> parse_csv(std::istream& in);

/// Shortest round-trip decimal rendering used by all machine-readable output.
std::string format_double(double value);

}  // namespace glaisher

#endif  // GLAISHER_BENCH_HPP
