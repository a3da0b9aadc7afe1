#ifndef GLAISHER_QUADRATURE_HPP
#define GLAISHER_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <string_view>

namespace glaisher {

using Evaluator = std::function<double(double)>;

enum class TruncationMode { truncate, compactify, automatic };

std::string_view to_string(TruncationMode mode) noexcept;

struct QuadratureResult {
    double value = 0.0;
    /// Discretization error estimate of the nodal rule on the retained domain.
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;
    /// Bound on the discarded tail; zero for finite intervals and compactified tails.
    double truncation_error = 0.0;
    /// Cut point actually used by the semi-infinite driver (b for finite intervals).
    double truncation_T = 0.0;
    /// Resolved tail handling; never automatic in a returned result.
    TruncationMode truncation_mode = TruncationMode::truncate;

    double total_error() const noexcept { return error_estimate + truncation_error; }
};

enum class EndpointFlag { none, log_singular_at_a };

// ---------------------------------------------------------------------------
// Integrand description consumed by the semi-infinite driver.

enum class IntegrandId {
    classical,
    binet_form12,
    binet_form13,
    malmsten_form18,
    malmsten_form19,
    lngamma_direct,
    custom,
};

std::string_view to_string(IntegrandId id) noexcept;

enum class TailKind { algebraic, exponential, compact };

/// Asymptotic decay of an integrand: |f(t)| ~ t^-order (algebraic) or
/// ~ e^{-rate t} (exponential). Compact means no tail beyond the domain.
struct TailClass {
    TailKind kind = TailKind::exponential;
    double order = 0.0;
    double rate = 0.0;

    static TailClass algebraic(double p) { return {TailKind::algebraic, p, 0.0}; }
    static TailClass exponential(double r) { return {TailKind::exponential, 0.0, r}; }
    static TailClass compact() { return {TailKind::compact, 0.0, 0.0}; }
};

/// Behaviour at the left endpoint t = 0.
struct ZeroLimit {
    bool log_singular = false;
    double value = 0.0;  // meaningful when !log_singular

    static ZeroLimit finite(double v) { return {false, v}; }
    static ZeroLimit logarithmic() { return {true, 0.0}; }
};

struct IntegrandSpec {
    IntegrandId id = IntegrandId::custom;
    Evaluator eval;
    ZeroLimit limit_at_zero;
    TailClass tail_class;
    /// Rigorous upper bound on |int_T^inf f| for T >= 1.
    std::function<double(double)> tail_bound;
};

// ---------------------------------------------------------------------------

struct TruncationPolicy {
    TruncationMode mode = TruncationMode::automatic;
    /// Cut point for explicit modes; 0 picks it as automatic mode would.
    double T = 0.0;
    /// Fraction of the tolerance the tail may consume when T is chosen
    /// automatically.
    double tail_fraction = 0.1;
    /// Lets an explicit truncation run even when the tail bound exceeds the
    /// tolerance. Only the convergence benchmark sets this.
    bool allow_tail_excess = false;

    static TruncationPolicy automatic() { return {}; }
    /// Truncation with the cut point chosen from the tail bound, as in
    /// automatic mode but without falling back to compactification.
    static TruncationPolicy truncate_auto() { return {TruncationMode::truncate, 0.0}; }
    static TruncationPolicy truncate_at(double T) { return {TruncationMode::truncate, T}; }
    static TruncationPolicy compactify(double T) { return {TruncationMode::compactify, T}; }
};

/// Cut point used when automatic mode compactifies an algebraic tail.
inline constexpr double kDefaultCompactifyPoint = 1.0;
inline constexpr std::int64_t kDefaultEvaluationBudget = 10'000;

struct QuadratureOptions {
    std::int64_t max_evaluations = kDefaultEvaluationBudget;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b] to absolute
/// tolerance tol. With log_singular_at_a the interval is first mapped by
/// x = a + (b - a) u^3, which turns an integrable ln(x - a) endpoint into a
/// bounded, continuously differentiable integrand.
///
/// Non-convergence within the evaluation budget is reported through
/// QuadratureResult::converged. A non-finite value from f throws
/// EvaluationError.
QuadratureResult integrate_finite(const Evaluator& f, double a, double b, double tol,
                                  EndpointFlag endpoint = EndpointFlag::none,
                                  const QuadratureOptions& options = {});

/// Integral of spec.eval over (0, inf). The policy decides how the tail is
/// handled: truncate at T (tail bound reported as truncation_error), or
/// compactify [T, inf) via t = 1/u into (0, 1/T].
///
/// Throws PolicyInfeasibleError when an algebraic tail is truncated with a
/// tail bound above tol.
QuadratureResult integrate_semi_infinite(const IntegrandSpec& spec, double tol,
                                         const TruncationPolicy& policy = {},
                                         const QuadratureOptions& options = {});

/// Smallest T >= 1 (to within 1%) with tail_bound(T) <= target. Throws
/// PolicyInfeasibleError when no T below 1e300 qualifies.
double choose_truncation_point(const std::function<double(double)>& tail_bound, double target);

}  // namespace glaisher

#endif  // GLAISHER_QUADRATURE_HPP
