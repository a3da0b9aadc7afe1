#include "glaisher/integrands.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "glaisher/errors.hpp"
#include "glaisher/specfun.hpp"

namespace glaisher {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Taylor coefficients about t = 0 (exact rationals).
constexpr std::array<double, 20> kBinetSeries = {
    1.0 / 24.0,
    -1.0 / 96.0,
    1.0 / 960.0,
    -1.0 / 23040.0,
    1.0 / 107520.0,
    -1.0 / 430080.0,
    1.0 / 23224320.0,
    73.0 / 1857945600.0,
    1.0 / 8174960640.0,
    -521.0 / 490497638400.0,
    1.0 / 4250979532800.0,
    193.0 / 7213783449600.0,
    1.0 / 3060705263616000.0,
    -58099.0 / 85699747381248000.0,
    1.0 / 2913791410962432000.0,
    14410301.0 / 839171926357180416000.0,
    1.0 / 3543170355730317312000.0,
    -92471077.0 / 212590221343819038720000.0,
    1.0 / 5357273577864239775744000.0,
    5194328171.0 / 471440074852053100265472000.0,
};
constexpr std::array<double, 20> kMalmstenSeries = {
    -1.0 / 24.0,
    5.0 / 128.0,
    -101.0 / 5760.0,
    77.0 / 15360.0,
    -1003.0 / 967680.0,
    1759.0 / 10321920.0,
    -3761.0 / 154828800.0,
    37.0 / 11796480.0,
    -43487.0 / 122624409600.0,
    21829.0 / 653996851200.0,
    -7677611.0 / 2678117105664000.0,
    11741.0 / 40809403514880.0,
    -22937.0 / 856997473812480.0,
    345493.0 / 457065319366656000.0,
    2348893.0 / 31786815392317440000.0,
    4316399.0 / 186482650301595648000.0,
    -282746099.0 / 60878108839366361088000.0,
    -211969117.0 / 510216531225165692928000.0,
    3487745273.0 / 32379126020058592051200000.0,
    1581378871.0 / 142860628743046394019840000.0,
};

template <std::size_t N>
double horner(const std::array<double, N>& coefficients, double t) {
    double acc = 0.0;
    for (std::size_t i = N; i-- > 0;) acc = coefficients[i] + t * acc;
    return acc;
}

void require_positive(double t, const char* name) {
    if (!(t > 0.0)) {
        throw DomainError(std::string(name) + " requires a positive argument, got " + std::to_string(t));
    }
}

}  // namespace

namespace detail {

double binet_series(double t) { return horner(kBinetSeries, t); }

double binet_direct(double t, BinetForm form) {
    const double one_minus_half = -std::expm1(-0.5 * t);
    if (form == BinetForm::form12) {
        const double kernel = 1.0 / std::expm1(t) - 1.0 / t + 0.5;
        return kernel * one_minus_half / (t * t);
    }
    const double bracket = t / std::tanh(0.5 * t) - 2.0;
    return one_minus_half * (bracket / t) / (2.0 * t * t);
}

double malmsten_series(double t) { return horner(kMalmstenSeries, t); }

double malmsten_form19_printed(double t) {
    const double numerator = (8.0 - 3.0 * t) * std::exp(t) - 8.0 * std::exp(0.5 * t) - t;
    return std::exp(-t) * numerator / (8.0 * t * t * std::expm1(t));
}

double malmsten_form19_factored(double t) {
    // Multiply numerator and denominator of the printed form by e^{-t}.
    const double numerator = (8.0 - 3.0 * t) - 8.0 * std::exp(-0.5 * t) - t * std::exp(-t);
    return numerator * std::exp(-t) / (8.0 * t * t * -std::expm1(-t));
}

double malmsten_direct(double t, MalmstenForm form) {
    if (form == MalmstenForm::form18) {
        const double bracket =
            0.125 - 0.5 / -std::expm1(-t) + 1.0 / (t * (1.0 + std::exp(-0.5 * t)));
        return bracket * std::exp(-t) / t;
    }
    return t > kMalmstenFactoredSwitch ? malmsten_form19_factored(t) : malmsten_form19_printed(t);
}

}  // namespace detail

double classical_integrand(double x) {
    require_positive(x, "classical_integrand");
    return x * std::log(x) / std::expm1(kTwoPi * x);
}

double binet_integrand(double t, BinetForm form) {
    require_positive(t, "binet_integrand");
    if (t < kIntegrandSeriesSwitch) return detail::binet_series(t);
    return detail::binet_direct(t, form);
}

double malmsten_integrand(double t, MalmstenForm form) {
    require_positive(t, "malmsten_integrand");
    if (t < kIntegrandSeriesSwitch) return detail::malmsten_series(t);
    return detail::malmsten_direct(t, form);
}

double lngamma_direct_integrand(double x) {
    if (!(x >= 0.0 && x <= 0.5)) {
        throw DomainError("lngamma_direct_integrand requires x in [0, 1/2], got " + std::to_string(x));
    }
    return log_gamma_plus_one(x);
}

double tail_bound(IntegrandId id, double T) {
    // The bounds below hold for T >= 1; anything shorter gets the trivial bound.
    if (!(T >= 1.0)) return std::numeric_limits<double>::infinity();
    switch (id) {
        case IntegrandId::classical: {
            // x ln x <= x^2 and 1/(e^{ax} - 1) <= e^{-ax} / (1 - e^{-a}) on x >= 1.
            constexpr double a = kTwoPi;
            const double moments = T * T / a + 2.0 * T / (a * a) + 2.0 / (a * a * a);
            return std::exp(-a * T) * moments / -std::expm1(-a);
        }
        case IntegrandId::binet_form12:
        case IntegrandId::binet_form13:
            // t coth(t/2) - 2 < t and 1 - e^{-t/2} < 1, so f(t) < 1/(2t^2).
            return 0.5 / T;
        case IntegrandId::malmsten_form18:
        case IntegrandId::malmsten_form19:
            // On t >= 1 the bracket of form 18 lies in (-2/3, 5/8].
            return (2.0 / 3.0) * std::exp(-T) / T;
        case IntegrandId::lngamma_direct:
            return 0.0;
        case IntegrandId::custom:
            break;
    }
    throw DomainError("no tail bound is defined for custom integrands");
}

IntegrandSpec make_integrand_spec(IntegrandId id) {
    IntegrandSpec spec;
    spec.id = id;
    spec.tail_bound = [id](double T) { return tail_bound(id, T); };
    switch (id) {
        case IntegrandId::classical:
            spec.eval = classical_integrand;
            spec.limit_at_zero = ZeroLimit::logarithmic();
            spec.tail_class = TailClass::exponential(kTwoPi);
            break;
        case IntegrandId::binet_form12:
        case IntegrandId::binet_form13: {
            const BinetForm form =
                id == IntegrandId::binet_form12 ? BinetForm::form12 : BinetForm::form13;
            spec.eval = [form](double t) { return binet_integrand(t, form); };
            spec.limit_at_zero = ZeroLimit::finite(1.0 / 24.0);
            spec.tail_class = TailClass::algebraic(2.0);
            break;
        }
        case IntegrandId::malmsten_form18:
        case IntegrandId::malmsten_form19: {
            const MalmstenForm form =
                id == IntegrandId::malmsten_form18 ? MalmstenForm::form18 : MalmstenForm::form19;
            spec.eval = [form](double t) { return malmsten_integrand(t, form); };
            spec.limit_at_zero = ZeroLimit::finite(-1.0 / 24.0);
            spec.tail_class = TailClass::exponential(1.0);
            break;
        }
        case IntegrandId::lngamma_direct:
            spec.eval = lngamma_direct_integrand;
            spec.limit_at_zero = ZeroLimit::finite(0.0);
            spec.tail_class = TailClass::compact();
            break;
        case IntegrandId::custom:
            throw DomainError("make_integrand_spec: custom integrands are built by the caller");
    }
    return spec;
}

}  // namespace glaisher
