#ifndef GLAISHER_INTEGRANDS_HPP
#define GLAISHER_INTEGRANDS_HPP

#include "glaisher/quadrature.hpp"

namespace glaisher {

// Integrands of the ln A representations. Every evaluator is pure; the
// Binet and Malmsten integrands switch to a frozen Taylor series below
// kIntegrandSeriesSwitch, where the printed forms cancel to third order.

inline constexpr double kIntegrandSeriesSwitch = 0.5;
/// Above this point the Malmsten form 19 evaluator factors e^{-t} out
/// analytically.
inline constexpr double kMalmstenFactoredSwitch = 30.0;

/// x ln x / (e^{2 pi x} - 1). Log-singular at 0: ~ ln(x) / (2 pi).
double classical_integrand(double x);

enum class BinetForm { form12 = 12, form13 = 13 };
enum class MalmstenForm { form18 = 18, form19 = 19 };

/// Integrand of int_0^{1/2} theta(x) dx after exchanging the order of
/// integration. Form 12:
///   (1/(e^t - 1) - 1/t + 1/2) (1 - e^{-t/2}) / t^2,
/// form 13:
///   (1 - e^{-t/2}) (t coth(t/2) - 2) / (2 t^3).
/// Tends to 1/24 at t = 0 and decays like 1/(2t^2).
double binet_integrand(double t, BinetForm form);

/// Integrand of int_0^{1/2} ln Gamma(x+1) dx from Malmsten's formula. Form 18:
///   [1/8 - 1/(2(1 - e^{-t})) + 1/(t(1 + e^{-t/2}))] e^{-t} / t,
/// form 19:
///   e^{-t} [(8 - 3t) e^t - 8 e^{t/2} - t] / (8 t^2 (e^t - 1)).
/// Tends to -1/24 at t = 0 and decays like -3 e^{-t} / (8t).
double malmsten_integrand(double t, MalmstenForm form);

/// ln Gamma(x+1) restricted to [0, 1/2].
double lngamma_direct_integrand(double x);

/// Rigorous upper bound on |int_T^inf f| for the integrand `id`, T >= 1.
double tail_bound(IntegrandId id, double T);

/// Self-describing record for one of the built-in integrands. lngamma_direct
/// has compact support [0, 1/2].
IntegrandSpec make_integrand_spec(IntegrandId id);

namespace detail {
// Exposed for seam and form-equivalence tests.
double binet_series(double t);
double binet_direct(double t, BinetForm form);
double malmsten_series(double t);
double malmsten_direct(double t, MalmstenForm form);
double malmsten_form19_printed(double t);
double malmsten_form19_factored(double t);
}  // namespace detail

}  // namespace glaisher

#endif  // GLAISHER_INTEGRANDS_HPP
