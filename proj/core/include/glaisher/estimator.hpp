#ifndef GLAISHER_ESTIMATOR_HPP
#define GLAISHER_ESTIMATOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "glaisher/quadrature.hpp"

namespace glaisher {

enum class Method { classical, binet, malmsten, direct_lgamma, limit_sequence };

std::string_view to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// The four integral routes, in report order.
inline constexpr Method kIntegralMethods[] = {Method::classical, Method::binet, Method::malmsten,
                                              Method::direct_lgamma};

/// ln A reference value, frozen after the dual-path construction in
/// construct_oracle() agreed to 1e-11.
inline constexpr double kLnAOracle = 0.2487544770337843;

struct ConstantEstimate {
    Method method = Method::classical;
    double ln_A = 0.0;
    double discretization_error = 0.0;
    double truncation_error = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
    /// Cut point and tail handling of the underlying integral (0 / truncate
    /// for routes without a tail).
    double truncation_T = 0.0;
    TruncationMode truncation_mode = TruncationMode::truncate;

    double total_error() const noexcept { return discretization_error + truncation_error; }
};

struct EstimatorOptions {
    std::int64_t max_evaluations = kDefaultEvaluationBudget;
    TruncationPolicy policy = TruncationPolicy::automatic();
};

/// Closed-form constants, computed from ln 2 and ln pi at full precision.
struct Constants {
    double ln2;
    double lnpi;
    /// int_0^{1/2} (x ln x - x) dx = -(ln 2 + 3/2) / 8
    double xlogx_integral;
    /// int_0^{1/2} ln(2 pi x) dx = (ln pi - 1) / 2
    double log2pix_integral;
    /// ln A = binet_prefix + (2/3) int binet integrand
    double binet_prefix;
    /// ln A = malmsten_prefix + (2/3) int malmsten integrand
    double malmsten_prefix;
};

const Constants& constants();

/// Coefficients of int_0^{1/2} ln Gamma(x+1) dx = -c0 - c1 ln 2 + c2 ln pi + c3 ln A.
struct HalfIntegralIdentity {
    double c0 = 0.5;
    double c1 = 7.0 / 24.0;
    double c2 = 0.25;
    double c3 = 1.5;

    double rhs(double ln_A) const;
    double solve_ln_A(double integral) const;
};

// Each route takes tol in [1e-13, 1e-3] as a bound on the total error of ln A
// and splits it between discretization and tail as the policy dictates.

ConstantEstimate ln_a_classical(double tol, const EstimatorOptions& options = {});
ConstantEstimate ln_a_binet(double tol, const EstimatorOptions& options = {});
ConstantEstimate ln_a_malmsten(double tol, const EstimatorOptions& options = {});
ConstantEstimate ln_a_direct_lgamma(double tol, const EstimatorOptions& options = {});

/// ln A from the n-th term of the Barnes G limit. With `richardson`, one
/// extrapolation step in 1/n^2 over (n/2, n) is applied (n must be even and
/// >= 4). Shares no code with the quadrature routes.
ConstantEstimate ln_a_limit_sequence(long n_max, bool richardson = false);

/// Repeated Richardson extrapolation in 1/n^2 over a doubling sequence
/// (e.g. 200, 400, 800). Returns the most extrapolated value.
double limit_sequence_extrapolated(std::span<const long> doubling_ns);

/// Dispatches to the route for `method` (limit_sequence uses n = 800 with
/// one Richardson step).
ConstantEstimate estimate(Method method, double tol, const EstimatorOptions& options = {});

/// Left side of the half-integral identity by quadrature minus the right side
/// built from ln_a_malmsten.
double identity_residual_eq4(double tol, const HalfIntegralIdentity& identity = {},
                             const EstimatorOptions& options = {});

struct OracleConstruction {
    double sequence_path;    // Richardson over n = 200, 400, 800
    double quadrature_path;  // compactified classical route at tol 1e-13
    double agreement() const;
};

OracleConstruction construct_oracle();

}  // namespace glaisher

#endif  // GLAISHER_ESTIMATOR_HPP
