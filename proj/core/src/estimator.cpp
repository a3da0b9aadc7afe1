#include "glaisher/estimator.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "glaisher/errors.hpp"
#include "glaisher/integrands.hpp"
#include "glaisher/specfun.hpp"

namespace glaisher {

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::classical: return "classical";
        case Method::binet: return "binet";
        case Method::malmsten: return "malmsten";
        case Method::direct_lgamma: return "direct_lgamma";
        case Method::limit_sequence: return "limit_sequence";
    }
    return "classical";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    if (name == "classical") return Method::classical;
    if (name == "binet") return Method::binet;
    if (name == "malmsten") return Method::malmsten;
    if (name == "direct_lgamma" || name == "direct-lgamma") return Method::direct_lgamma;
    if (name == "limit_sequence" || name == "limit-sequence") return Method::limit_sequence;
    return std::nullopt;
}

const Constants& constants() {
    static const Constants c = [] {
        Constants k{};
        k.ln2 = std::numbers::ln2;
        k.lnpi = std::log(std::numbers::pi);
        k.xlogx_integral = -0.125 * (k.ln2 + 1.5);
        k.log2pix_integral = 0.5 * (k.lnpi - 1.0);
        k.binet_prefix = k.ln2 / 9.0 + 1.0 / 24.0;
        k.malmsten_prefix = 1.0 / 3.0 + 7.0 / 36.0 * k.ln2 - k.lnpi / 6.0;
        return k;
    }();
    return c;
}

double HalfIntegralIdentity::rhs(double ln_A) const {
    const Constants& k = constants();
    return -c0 - c1 * k.ln2 + c2 * k.lnpi + c3 * ln_A;
}

double HalfIntegralIdentity::solve_ln_A(double integral) const {
    const Constants& k = constants();
    return (integral + c0 + c1 * k.ln2 - c2 * k.lnpi) / c3;
}

namespace {

void check_tolerance(double tol) {
    if (!(tol >= 1e-13 && tol <= 1e-3)) {
        throw DomainError("estimator tolerance must lie in [1e-13, 1e-3], got " + std::to_string(tol));
    }
}

// ln A = offset + slope * integral; the integral is requested to tol / |slope|.
ConstantEstimate assemble(Method method, IntegrandId id, double offset, double slope, double tol,
                          const EstimatorOptions& options) {
    check_tolerance(tol);
    const IntegrandSpec spec = make_integrand_spec(id);
    const double scale = std::fabs(slope);
    const QuadratureResult q = integrate_semi_infinite(spec, tol / scale, options.policy,
                                                       {options.max_evaluations});

    ConstantEstimate e;
    e.method = method;
    e.ln_A = offset + slope * q.value;
    e.discretization_error = scale * q.error_estimate;
    e.truncation_error = scale * q.truncation_error;
    e.evaluations = q.evaluations;
    e.converged = q.converged;
    e.truncation_mode = q.truncation_mode;
    e.truncation_T = q.truncation_T;
    return e;
}

}  // namespace

ConstantEstimate ln_a_classical(double tol, const EstimatorOptions& options) {
    return assemble(Method::classical, IntegrandId::classical, 1.0 / 12.0, -2.0, tol, options);
}

ConstantEstimate ln_a_binet(double tol, const EstimatorOptions& options) {
    return assemble(Method::binet, IntegrandId::binet_form13, constants().binet_prefix, 2.0 / 3.0,
                    tol, options);
}

ConstantEstimate ln_a_malmsten(double tol, const EstimatorOptions& options) {
    return assemble(Method::malmsten, IntegrandId::malmsten_form19, constants().malmsten_prefix,
                    2.0 / 3.0, tol, options);
}

ConstantEstimate ln_a_direct_lgamma(double tol, const EstimatorOptions& options) {
    check_tolerance(tol);
    const HalfIntegralIdentity identity;
    const double slope = 1.0 / identity.c3;
    const QuadratureResult q = integrate_finite(lngamma_direct_integrand, 0.0, 0.5, tol / slope,
                                                EndpointFlag::none, {options.max_evaluations});
    ConstantEstimate e;
    e.method = Method::direct_lgamma;
    e.ln_A = identity.solve_ln_A(q.value);
    e.discretization_error = slope * q.error_estimate;
    e.truncation_error = 0.0;
    e.evaluations = q.evaluations;
    e.converged = q.converged;
    e.truncation_T = 0.5;
    e.truncation_mode = TruncationMode::truncate;
    return e;
}

ConstantEstimate ln_a_limit_sequence(long n_max, bool richardson) {
    if (n_max < 1 || n_max > 100'000) {
        throw DomainError("ln_a_limit_sequence requires n_max in [1, 1e5]");
    }
    ConstantEstimate e;
    e.method = Method::limit_sequence;
    e.converged = true;
    e.truncation_T = static_cast<double>(n_max);

    if (!richardson) {
        // The error behaves like c / n^2, so term(n) - term(2n) = (3/4) c / n^2.
        const double term = glaisher_seq_log_term(n_max);
        e.ln_A = term;
        e.truncation_error = 4.0 / 3.0 * std::fabs(term - glaisher_seq_log_term(2 * n_max));
        e.evaluations = 3 * n_max;
        return e;
    }

    if (n_max < 4 || n_max % 2 != 0) {
        throw DomainError("a Richardson step needs an even n_max >= 4");
    }
    const double fine = glaisher_seq_log_term(n_max);
    const double coarse = glaisher_seq_log_term(n_max / 2);
    e.ln_A = (4.0 * fine - coarse) / 3.0;
    e.evaluations = n_max + n_max / 2;
    if (n_max % 4 == 0) {
        // Remaining error ~ c / n^4: R(n/2) - R(n) = 15 c / n^4.
        const double coarser = glaisher_seq_log_term(n_max / 4);
        const double previous = (4.0 * coarse - coarser) / 3.0;
        e.truncation_error = std::fabs(previous - e.ln_A) / 15.0;
        e.evaluations += n_max / 4;
    } else {
        e.truncation_error = std::fabs(e.ln_A - fine);
    }
    return e;
}

double limit_sequence_extrapolated(std::span<const long> doubling_ns) {
    if (doubling_ns.empty()) {
        throw DomainError("limit_sequence_extrapolated needs at least one n");
    }
    for (std::size_t i = 1; i < doubling_ns.size(); ++i) {
        if (doubling_ns[i] != 2 * doubling_ns[i - 1]) {
            throw DomainError("limit_sequence_extrapolated needs a doubling sequence");
        }
    }
    std::vector<double> row;
    row.reserve(doubling_ns.size());
    for (long n : doubling_ns) row.push_back(glaisher_seq_log_term(n));
    // Neville-style table: column j removes the n^{-2j} term.
    double factor = 4.0;
    for (std::size_t level = 1; level < row.size(); ++level) {
        for (std::size_t i = row.size() - 1; i >= level; --i) {
            row[i] = row[i] + (row[i] - row[i - 1]) / (factor - 1.0);
        }
        factor *= 4.0;
    }
    return row.back();
}

ConstantEstimate estimate(Method method, double tol, const EstimatorOptions& options) {
    switch (method) {
        case Method::classical: return ln_a_classical(tol, options);
        case Method::binet: return ln_a_binet(tol, options);
        case Method::malmsten: return ln_a_malmsten(tol, options);
        case Method::direct_lgamma: return ln_a_direct_lgamma(tol, options);
        case Method::limit_sequence: return ln_a_limit_sequence(800, true);
    }
    throw DomainError("unknown method");
}

double identity_residual_eq4(double tol, const HalfIntegralIdentity& identity,
                             const EstimatorOptions& options) {
    check_tolerance(tol);
    const QuadratureResult lhs = integrate_finite(lngamma_direct_integrand, 0.0, 0.5, tol,
                                                  EndpointFlag::none, {options.max_evaluations});
    const ConstantEstimate malmsten = ln_a_malmsten(tol, options);
    return lhs.value - identity.rhs(malmsten.ln_A);
}

double OracleConstruction::agreement() const { return std::fabs(sequence_path - quadrature_path); }

OracleConstruction construct_oracle() {
    static constexpr long kNs[] = {200, 400, 800};
    OracleConstruction oracle{};
    oracle.sequence_path = limit_sequence_extrapolated(kNs);
    EstimatorOptions options;
    options.max_evaluations = 1'000'000;
    options.policy = TruncationPolicy::compactify(kDefaultCompactifyPoint);
    oracle.quadrature_path = ln_a_classical(1e-13, options).ln_A;
    return oracle;
}

}  // namespace glaisher
