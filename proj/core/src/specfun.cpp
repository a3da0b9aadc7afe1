#include "glaisher/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "glaisher/errors.hpp"
#include "glaisher/summation.hpp"

namespace glaisher {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// zeta(k) - 1 for k = 2..41.
constexpr std::array<double, 40> kZetaMinusOne = {
    0.644934066848226436,      0.202056903159594285,      0.0823232337111381915,
    0.0369277551433699263,     0.0173430619844491397,     0.00834927738192282684,
    0.00407735619794433938,    0.00200839282608221442,    0.000994575127818085337,
    0.000494188604119464559,   0.000246086553308048299,   0.000122713347578489147,
    0.0000612481350587048293,  0.0000305882363070204936,  0.0000152822594086518717,
    7.63719763789976227e-6,    3.81729326499983986e-6,    1.90821271655393893e-6,
    9.53962033872796113e-7,    4.76932986787806463e-7,    2.3845050272773299e-7,
    1.19219925965311073e-7,    5.96081890512594796e-8,    2.98035035146522802e-8,
    1.49015548283650412e-8,    7.45071178983542949e-9,    3.72533402478845705e-9,
    1.86265972351304901e-9,    9.31327432419668183e-10,   4.65662906503378407e-10,
    2.32831183367650549e-10,   1.16415501727005198e-10,   5.82077208790270089e-11,
    2.91038504449709969e-11,   1.45519218910419842e-11,   7.27595983505748101e-12,
    3.63797954737865119e-12,   1.81898965030706595e-12,   9.09494784026388928e-13,
    4.54747378304215403e-13,
};

// B_{2k} / (2k)! for k = 1..13.
constexpr std::array<double, 13> kBernoulliOverFactorial = {
    0.0833333333333333333,     -0.00138888888888888889,   0.0000330687830687830688,
    -8.2671957671957672e-7,    2.0876756987868099e-8,     -5.28419013868749318e-10,
    1.33825365306846788e-11,   -3.38968029632258287e-13,  8.58606205627784456e-15,
    -2.17486869855806187e-16,  5.50900282836022952e-18,   -1.39544646858125233e-19,
    3.53470703962946747e-21,
};

// B_{2k} for the Stirling series, k = 1..8.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
    -3617.0 / 510.0,
};

// ln Gamma(2 + e) for |e| <= 1/2.
double log_gamma_near_two(double e) {
    double acc = 0.0;
    for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
        const double k = static_cast<double>(i + 2);
        const double c = ((i % 2 == 0) ? 1.0 : -1.0) * kZetaMinusOne[i] / k;
        acc = c + e * acc;
    }
    return e * ((1.0 - kEulerGamma) + e * acc);
}

double log_gamma_stirling(double z) {
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (std::size_t i = kBernoulli.size(); i-- > 0;) {
        const double k = static_cast<double>(i + 1);
        series = kBernoulli[i] / (2.0 * k * (2.0 * k - 1.0)) + inv2 * series;
    }
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series * inv;
}

}  // namespace

double log_gamma_plus_one(double x) {
    if (!(x > -1.0)) {
        throw DomainError("log_gamma_plus_one requires x > -1, got " + std::to_string(x));
    }
    if (x == 0.0 || x == 1.0) return 0.0;

    if (x < -0.5) {
        // Gamma(1+x) = Gamma(3+x) / ((1+x)(2+x)).
        return log_gamma_near_two(x + 1.0) - std::log1p(x) - std::log(x + 2.0);
    }
    if (x < 0.5) {
        return log_gamma_near_two(x) - std::log1p(x);
    }
    if (x <= 1.5) {
        return log_gamma_near_two(x - 1.0);
    }
    if (x < 19.0) {
        // Shift down to 2 + e with e in [-1/2, 1/2].
        const double m = std::floor(x - 0.5);
        double product = 1.0;
        for (double k = 0.0; k < m; k += 1.0) {
            product *= (x - k);
        }
        return log_gamma_near_two(x - 1.0 - m) + std::log(product);
    }
    return log_gamma_stirling(x + 1.0);
}

namespace detail {

double binet_kernel_over_t_series(double t) {
    const double t2 = t * t;
    double acc = 0.0;
    for (std::size_t i = kBernoulliOverFactorial.size(); i-- > 0;) {
        acc = kBernoulliOverFactorial[i] + t2 * acc;
    }
    return acc;
}

double binet_kernel_over_t_direct(double t) {
    return (1.0 / std::expm1(t) - 1.0 / t + 0.5) / t;
}

double malmsten_numerator_series(double z, double t) {
    // z(1 - e^{-t}) - (1 - e^{-zt}) = sum_{k>=2} (-1)^{k+1} (z - z^k) t^k / k!
    CompensatedSum sum;
    double t_pow = t;        // t^k / k!
    double z_pow = z;        // z^k
    for (int k = 2; k <= 40; ++k) {
        t_pow *= t / k;
        z_pow *= z;
        const double term = ((k % 2 == 0) ? -1.0 : 1.0) * (z - z_pow) * t_pow;
        sum += term;
        if (std::fabs(term) <= 1e-18 * std::fabs(sum.value()) && k > 4) break;
    }
    return sum.value();
}

double malmsten_numerator_direct(double z, double t) {
    return -z * std::expm1(-t) + std::expm1(-z * t);
}

}  // namespace detail

double binet_kernel_over_t(double t) {
    if (t < kBinetKernelSeriesSwitch) return detail::binet_kernel_over_t_series(t);
    return detail::binet_kernel_over_t_direct(t);
}

QuadratureResult binet_theta(double x, double tol, const QuadratureOptions& options) {
    if (!(x >= 0.1)) {
        throw DomainError("binet_theta is evaluated pointwise only for x >= 0.1");
    }
    if (!(tol > 0.0 && tol <= 1e-2)) {
        throw DomainError("binet_theta tolerance must lie in (0, 1e-2]");
    }
    IntegrandSpec spec;
    spec.eval = [x](double t) { return binet_kernel_over_t(t) * std::exp(-x * t); };
    spec.limit_at_zero = ZeroLimit::finite(1.0 / 12.0);
    spec.tail_class = TailClass::exponential(x);
    // 0 < kernel/t < min(1/12, 1/(2t)).
    spec.tail_bound = [x](double T) {
        return std::min(1.0 / 12.0, 1.0 / (2.0 * T)) * std::exp(-x * T) / x;
    };
    return integrate_semi_infinite(spec, std::max(tol, 1e-14), TruncationPolicy::automatic(), options);
}

double malmsten_gamma_integrand(double z, double t) {
    if (!(t > 0.0)) {
        throw DomainError("malmsten_gamma_integrand requires t > 0");
    }
    const double scale = t * std::max(1.0, z);
    const double numerator = scale < kMalmstenSeriesSwitch ? detail::malmsten_numerator_series(z, t)
                                                           : detail::malmsten_numerator_direct(z, t);
    // numerator / (1 - e^{-t}) * e^{-t} / t
    return numerator / t / std::expm1(t);
}

QuadratureResult malmsten_log_gamma(double z, double tol, const QuadratureOptions& options) {
    if (!(z >= 0.0)) {
        throw DomainError("malmsten_log_gamma requires z >= 0");
    }
    if (!(tol > 0.0 && tol <= 1e-2)) {
        throw DomainError("malmsten_log_gamma tolerance must lie in (0, 1e-2]");
    }
    IntegrandSpec spec;
    spec.eval = [z](double t) { return malmsten_gamma_integrand(z, t); };
    spec.limit_at_zero = ZeroLimit::finite(0.5 * z * (z - 1.0));
    spec.tail_class = TailClass::exponential(1.0);
    // For t >= 1 the ratio (1 - e^{-zt}) / (1 - e^{-t}) lies in [0, 1/(1 - 1/e)].
    spec.tail_bound = [z](double T) {
        return (z + 1.0 / (1.0 - std::exp(-1.0))) * std::exp(-T) / T;
    };
    return integrate_semi_infinite(spec, std::max(tol, 1e-14), TruncationPolicy::automatic(), options);
}

double barnes_g_log(long n) {
    if (n < 2) {
        throw DomainError("barnes_g_log requires n >= 2");
    }
    CompensatedSum sum;
    for (long k = 1; k <= n - 2; ++k) {
        sum += log_gamma_plus_one(static_cast<double>(k));
    }
    return sum.value();
}

double glaisher_seq_log_term(long n) {
    if (n < 1) {
        throw DomainError("glaisher_seq_log_term requires n >= 1");
    }
    // With ln G(n+1) = sum_{j<n} (n - j) ln j and sum_{j<n} (n - j) = n(n-1)/2,
    //   ln term = (n/2) ln 2pi + (n/2 - 1/12) ln n + 1/12
    //             - [3n^2/4 + sum_{j<n} (n - j) ln(j/n)],
    // where the bracket is the only O(n^2) cancellation. Rounding errors of
    // double-precision ln(j/n) are correlated across j and accumulate to
    // ~1e-12 at n = 800, so each product is formed in extended precision and
    // carried into the compensated sum as a hi/lo pair.
    using wide = long double;
    const wide nw = static_cast<wide>(n);
    auto add_wide = [](CompensatedSum& sum, wide value) {
        const double hi = static_cast<double>(value);
        sum += hi;
        sum += static_cast<double>(value - static_cast<wide>(hi));
    };

    CompensatedSum bracket;
    add_wide(bracket, 0.75L * nw * nw);
    for (long j = 1; j < n; ++j) {
        const wide jw = static_cast<wide>(j);
        const wide log_ratio = 2 * j > n ? std::log1p((jw - nw) / nw) : std::log(jw / nw);
        add_wide(bracket, (nw - jw) * log_ratio);
    }

    // Remaining pieces, added largest magnitude first.
    constexpr wide kLog2Pi = 1.83787706640934548356065947281123527L;
    std::array<wide, 3> pieces = {0.5L * nw * kLog2Pi, (0.5L * nw - 1.0L / 12.0L) * std::log(nw),
                                  1.0L / 12.0L};
    std::sort(pieces.begin(), pieces.end(),
              [](wide a, wide b) { return std::fabs(a) > std::fabs(b); });

    CompensatedSum total;
    total += -bracket.high();
    for (wide piece : pieces) add_wide(total, piece);
    total += -bracket.low();
    return total.value();
}

}  // namespace glaisher
