#ifndef GLAISHER_TOOLS_CLI_HPP
#define GLAISHER_TOOLS_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glaisher/estimator.hpp"

namespace glaisher::cli {

enum class Command { eval, compare, check, convergence };
enum class Format { text, json, csv };

// Exit statuses (sysexits.h values for usage, software and I/O errors).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitSoftware = 70;
inline constexpr int kExitIo = 74;

/// Every default the tool uses, in one place.
struct Defaults {
    /// Total ln A tolerance; tight enough that all four routes cross-check at 1e-9.
    static constexpr double tol = 1e-10;
    static constexpr double min_tol = 1e-13;
    static constexpr double max_tol = 1e-3;
    /// Truncation sweep: spans a factor 8 so the 1/T tail law is visible.
    static constexpr double T_list[] = {25.0, 50.0, 100.0, 200.0};
    /// Node-budget sweep: doubling from the smallest budget that reaches 1e-9.
    static constexpr std::int64_t budgets[] = {64, 128, 256, 512, 1024};
    static constexpr std::int64_t max_evaluations = kDefaultEvaluationBudget;
};

struct CliConfig {
    Command command = Command::eval;
    std::optional<Method> method;
    double tol = Defaults::tol;
    Format format = Format::text;
    std::optional<std::filesystem::path> output_path;
    std::vector<double> T_list;
    std::vector<std::int64_t> budgets;
    std::int64_t max_evaluations = Defaults::max_evaluations;
};

/// Runs the tool on argv-style arguments (without the program name) and
/// returns the exit status. Reports go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int cmd_eval(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_convergence(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace glaisher::cli

#endif  // GLAISHER_TOOLS_CLI_HPP
