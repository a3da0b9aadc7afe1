#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "glaisher/errors.hpp"
#include "glaisher/integrands.hpp"
#include "reference.hpp"

using namespace glaisher;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> grid;
    grid.reserve(n);
    const double step = (std::log(hi) - std::log(lo)) / (n - 1);
    for (int i = 0; i < n; ++i) grid.push_back(std::exp(std::log(lo) + i * step));
    grid.back() = hi;
    return grid;
}

double relative_gap(double a, double b) {
    return std::fabs(a - b) / std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace

TEST(ClassicalIntegrand, Values) {
    EXPECT_EQ(classical_integrand(1.0), 0.0);
    const double expected = 0.5 * std::log(0.5) / std::expm1(std::numbers::pi);
    EXPECT_NEAR(classical_integrand(0.5), expected, 1e-17);
    EXPECT_NEAR(classical_integrand(0.5), -0.0156533, 1e-7);
    EXPECT_THROW(classical_integrand(0.0), DomainError);
    EXPECT_THROW(classical_integrand(-1.0), DomainError);
}

TEST(ClassicalIntegrand, NoOverflowFarOut) {
    EXPECT_EQ(classical_integrand(1000.0), 0.0);
    EXPECT_TRUE(std::isfinite(classical_integrand(1e-300)));
}

TEST(BinetIntegrand, Values) {
    EXPECT_NEAR(binet_integrand(1.0, BinetForm::form13), 0.0322553207708047, 1e-15);
    EXPECT_NEAR(binet_integrand(100.0, BinetForm::form13), 4.9e-5, 1e-7);
    EXPECT_NEAR(binet_integrand(1e-4, BinetForm::form13), 0.04166562501, 1e-11);
}

TEST(BinetIntegrand, LimitAtZero) {
    for (BinetForm form : {BinetForm::form12, BinetForm::form13}) {
        EXPECT_NEAR(binet_integrand(1e-9, form), 1.0 / 24.0, 1e-10);
        EXPECT_NEAR(binet_integrand(1e-300, form), 1.0 / 24.0, 1e-15);
    }
}

TEST(MalmstenIntegrand, Values) {
    EXPECT_NEAR(malmsten_integrand(1.0, MalmstenForm::form19), -0.016013432373744934, 1e-15);
    EXPECT_NEAR(malmsten_integrand(1.0, MalmstenForm::form19), -0.0160135, 1e-7);
    EXPECT_NEAR(malmsten_integrand(1e-4, MalmstenForm::form19), -0.04166276059, 1e-11);
}

TEST(MalmstenIntegrand, LimitAtZero) {
    for (MalmstenForm form : {MalmstenForm::form18, MalmstenForm::form19}) {
        EXPECT_NEAR(malmsten_integrand(1e-9, form), -1.0 / 24.0, 1e-10);
        EXPECT_NEAR(malmsten_integrand(1e-300, form), -1.0 / 24.0, 1e-15);
    }
}

TEST(MalmstenIntegrand, FiniteWhereThePrintedFormOverflows) {
    for (double t : {700.0, 710.0, 800.0, 1e4, 1e300}) {
        const double v = malmsten_integrand(t, MalmstenForm::form19);
        EXPECT_TRUE(std::isfinite(v)) << "t=" << t;
        EXPECT_LE(v, 0.0);
    }
}

TEST(FormEquivalence, BinetFormsAgreeOnLogGrid) {
    for (double t : log_grid(1e-3, 50.0, 1000)) {
        EXPECT_LE(relative_gap(binet_integrand(t, BinetForm::form12), binet_integrand(t, BinetForm::form13)),
                  1e-12)
            << "t=" << t;
    }
}

TEST(FormEquivalence, MalmstenFormsAgreeOnLogGrid) {
    for (double t : log_grid(1e-3, 50.0, 1000)) {
        EXPECT_LE(relative_gap(malmsten_integrand(t, MalmstenForm::form18),
                               malmsten_integrand(t, MalmstenForm::form19)),
                  1e-12)
            << "t=" << t;
    }
}

TEST(FormEquivalence, StrictRelativeAgreement) {
    // Stronger than the max(1, |value|) scaling: both integrands are O(1e-2) here.
    for (double t : log_grid(1e-3, 50.0, 1000)) {
        const double b12 = binet_integrand(t, BinetForm::form12);
        const double b13 = binet_integrand(t, BinetForm::form13);
        EXPECT_LE(std::fabs(b12 - b13), 1e-12 * std::fabs(b13)) << "t=" << t;
        const double m18 = malmsten_integrand(t, MalmstenForm::form18);
        const double m19 = malmsten_integrand(t, MalmstenForm::form19);
        EXPECT_LE(std::fabs(m18 - m19), 1e-12 * std::fabs(m19)) << "t=" << t;
    }
}

TEST(SeriesSeam, BinetContinuousAtSwitch) {
    const double t = kIntegrandSeriesSwitch;
    const double series = detail::binet_series(t);
    for (BinetForm form : {BinetForm::form12, BinetForm::form13}) {
        EXPECT_NEAR(series, detail::binet_direct(t, form), 1e-14) << static_cast<int>(form);
    }
    EXPECT_NEAR(binet_integrand(std::nextafter(t, 0.0), BinetForm::form13),
                binet_integrand(t, BinetForm::form13), 1e-14);
}

TEST(SeriesSeam, MalmstenContinuousAtSwitch) {
    const double t = kIntegrandSeriesSwitch;
    const double series = detail::malmsten_series(t);
    for (MalmstenForm form : {MalmstenForm::form18, MalmstenForm::form19}) {
        EXPECT_NEAR(series, detail::malmsten_direct(t, form), 1e-14) << static_cast<int>(form);
    }
    EXPECT_NEAR(malmsten_integrand(std::nextafter(t, 0.0), MalmstenForm::form19),
                malmsten_integrand(t, MalmstenForm::form19), 1e-14);
}

TEST(SeriesSeam, MalmstenFactoredFormContinuous) {
    const double t = kMalmstenFactoredSwitch;
    EXPECT_NEAR(detail::malmsten_form19_printed(t), detail::malmsten_form19_factored(t),
                1e-14 * std::fabs(detail::malmsten_form19_factored(t)));
}

TEST(SignProperties, BinetPositiveMalmstenNegative) {
    // Past t ~ 740 the Malmsten integrand underflows to -0.
    for (double t : log_grid(1e-6, 700.0, 4000)) {
        EXPECT_GT(binet_integrand(t, BinetForm::form13), 0.0) << "t=" << t;
        EXPECT_GT(binet_integrand(t, BinetForm::form12), 0.0) << "t=" << t;
        EXPECT_LT(malmsten_integrand(t, MalmstenForm::form19), 0.0) << "t=" << t;
        EXPECT_LT(malmsten_integrand(t, MalmstenForm::form18), 0.0) << "t=" << t;
    }
}

TEST(LngammaDirectIntegrand, Values) {
    EXPECT_EQ(lngamma_direct_integrand(0.0), 0.0);
    EXPECT_NEAR(lngamma_direct_integrand(0.5), 0.5 * std::log(std::numbers::pi) - std::numbers::ln2,
                1e-15);
    EXPECT_THROW(lngamma_direct_integrand(0.6), DomainError);
    EXPECT_THROW(lngamma_direct_integrand(-0.1), DomainError);
}

TEST(TailBound, SpotValues) {
    const double binet100 = tail_bound(IntegrandId::binet_form13, 100.0);
    EXPECT_GE(binet100, 5e-3);
    EXPECT_LE(binet100, 2e-2);
    EXPECT_LE(tail_bound(IntegrandId::malmsten_form19, 40.0), 1e-15);
    EXPECT_LE(tail_bound(IntegrandId::classical, 5.0), 1e-12);
    EXPECT_EQ(tail_bound(IntegrandId::lngamma_direct, 3.0), 0.0);
}

TEST(TailBound, BinetBoundIsTight) {
    // int_100^inf of the Binet integrand (mpmath quadrature), to three digits.
    const double true_tail = 0.00495;
    const double bound = tail_bound(IntegrandId::binet_form13, 100.0);
    EXPECT_GE(bound, true_tail);
    EXPECT_LE(bound, 1.05 * true_tail);
}

TEST(TailBound, NonincreasingInT) {
    for (IntegrandId id : {IntegrandId::classical, IntegrandId::binet_form12, IntegrandId::binet_form13,
                           IntegrandId::malmsten_form18, IntegrandId::malmsten_form19}) {
        double previous = INFINITY;
        for (double T = 1.0; T <= 1000.0; T *= 1.1) {
            const double b = tail_bound(id, T);
            EXPECT_LE(b, previous) << to_string(id) << " T=" << T;
            previous = b;
        }
    }
}

TEST(TailBound, SoundAgainstIndependentQuadrature) {
    struct Case {
        IntegrandId id;
        long double (*f)(long double);
    };
    const Case cases[] = {
        {IntegrandId::classical,
         [](long double x) { return x * std::log(x) / std::expm1(2.0L * std::numbers::pi_v<long double> * x); }},
        {IntegrandId::binet_form13,
         [](long double t) { return static_cast<long double>(binet_integrand(static_cast<double>(t), BinetForm::form13)); }},
        {IntegrandId::malmsten_form19,
         [](long double t) {
             return static_cast<long double>(malmsten_integrand(static_cast<double>(t), MalmstenForm::form19));
         }},
    };
    for (const Case& c : cases) {
        for (double T : {5.0, 10.0, 20.0, 50.0, 100.0}) {
            const long double segment = reference::simpson_geometric(c.f, T, 10.0 * T, 20, 400);
            EXPECT_GE(tail_bound(c.id, T), std::fabs(static_cast<double>(segment)))
                << to_string(c.id) << " T=" << T;
        }
    }
}

TEST(TailBound, InfiniteBelowOneAndUndefinedForCustom) {
    EXPECT_TRUE(std::isinf(tail_bound(IntegrandId::binet_form13, 0.5)));
    EXPECT_THROW(tail_bound(IntegrandId::custom, 10.0), DomainError);
}

TEST(IntegrandSpec, DeclaredBehaviour) {
    const IntegrandSpec classical = make_integrand_spec(IntegrandId::classical);
    EXPECT_TRUE(classical.limit_at_zero.log_singular);
    EXPECT_EQ(classical.tail_class.kind, TailKind::exponential);
    EXPECT_DOUBLE_EQ(classical.tail_class.rate, 2.0 * std::numbers::pi);

    const IntegrandSpec binet = make_integrand_spec(IntegrandId::binet_form13);
    EXPECT_FALSE(binet.limit_at_zero.log_singular);
    EXPECT_DOUBLE_EQ(binet.limit_at_zero.value, 1.0 / 24.0);
    EXPECT_EQ(binet.tail_class.kind, TailKind::algebraic);
    EXPECT_EQ(binet.tail_class.order, 2.0);

    const IntegrandSpec malmsten = make_integrand_spec(IntegrandId::malmsten_form19);
    EXPECT_DOUBLE_EQ(malmsten.limit_at_zero.value, -1.0 / 24.0);
    EXPECT_EQ(malmsten.tail_class.kind, TailKind::exponential);
    EXPECT_EQ(malmsten.eval(1.0), malmsten_integrand(1.0, MalmstenForm::form19));

    EXPECT_EQ(make_integrand_spec(IntegrandId::lngamma_direct).tail_class.kind, TailKind::compact);
    EXPECT_THROW(make_integrand_spec(IntegrandId::custom), DomainError);
}
