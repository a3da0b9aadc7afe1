#ifndef GLAISHER_SPECFUN_HPP
#define GLAISHER_SPECFUN_HPP

#include "glaisher/quadrature.hpp"

namespace glaisher {

/// ln Gamma(x + 1) for real x > -1.
///
/// The argument is shifted by the recurrence into [1.5, 2.5], where the
/// Taylor series of ln Gamma about 2 (coefficients (-1)^k (zeta(k) - 1) / k)
/// is summed; arguments above 20 use the Stirling series instead. Absolute
/// error is a few ulp of max(1, |result|) across (-1, 50]. Γ(1) and Γ(2)
/// return exactly zero. Throws DomainError for x <= -1 or NaN.
double log_gamma_plus_one(double x);

/// Kernel of Binet's integral divided by t:
///   (1/(e^t - 1) - 1/t + 1/2) / t,
/// which tends to 1/12 at t = 0. Below kBinetKernelSeriesSwitch the
/// Bernoulli series sum_k B_{2k} t^{2k-2} / (2k)! is used.
double binet_kernel_over_t(double t);
inline constexpr double kBinetKernelSeriesSwitch = 1.0;

namespace detail {
double binet_kernel_over_t_series(double t);
double binet_kernel_over_t_direct(double t);
}  // namespace detail

/// Binet's remainder theta(x) = ln Gamma(x+1) - x ln x + x - ln(2 pi x) / 2,
/// computed from its integral representation. Requires x >= 0.1 and
/// tol in (0, 1e-2]; tol is an absolute target.
QuadratureResult binet_theta(double x, double tol, const QuadratureOptions& options = {});

/// Integrand of Malmsten's formula
///   [z - (1 - e^{-zt}) / (1 - e^{-t})] e^{-t} / t,
/// with limit z(z - 1)/2 at t = 0. The numerator z(1 - e^{-t}) - (1 - e^{-zt})
/// is summed from its exact power series while t * max(1, z) is below
/// kMalmstenSeriesSwitch.
double malmsten_gamma_integrand(double z, double t);
inline constexpr double kMalmstenSeriesSwitch = 0.5;

namespace detail {
double malmsten_numerator_series(double z, double t);
double malmsten_numerator_direct(double z, double t);
}  // namespace detail

/// ln Gamma(z + 1) from Malmsten's integral. z >= 0, tol in (0, 1e-2].
QuadratureResult malmsten_log_gamma(double z, double tol, const QuadratureOptions& options = {});

/// ln G(n) for the Barnes G-function, G(n) = prod_{k=1}^{n-2} k!, as a
/// compensated sum of ln Gamma values. n >= 2.
double barnes_g_log(long n);

/// Logarithm of the n-th term of the classical limit for the
/// Glaisher-Kinkelin constant,
///   (2 pi)^{n/2} n^{n^2/2 - 1/12} e^{-3n^2/4 + 1/12} / G(n + 1).
double glaisher_seq_log_term(long n);

}  // namespace glaisher

#endif  // GLAISHER_SPECFUN_HPP
