#include <benchmark/benchmark.h>

#include <cmath>

#include "glaisher/glaisher.hpp"

using namespace glaisher;

namespace {

void BM_LogGammaPlusOne(benchmark::State& state) {
    double x = 0.013;
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_gamma_plus_one(x));
        x = x < 30.0 ? x * 1.37 : 0.013;
    }
}
BENCHMARK(BM_LogGammaPlusOne);

template <typename F>
void sweep_integrand(benchmark::State& state, F f) {
    double t = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f(t));
        t = t < 50.0 ? t * 1.09 : 1e-3;
    }
}

void BM_BinetIntegrand(benchmark::State& state) {
    sweep_integrand(state, [](double t) { return binet_integrand(t, BinetForm::form13); });
}
BENCHMARK(BM_BinetIntegrand);

void BM_MalmstenIntegrand(benchmark::State& state) {
    sweep_integrand(state, [](double t) { return malmsten_integrand(t, MalmstenForm::form19); });
}
BENCHMARK(BM_MalmstenIntegrand);

void BM_ClassicalIntegrand(benchmark::State& state) { sweep_integrand(state, classical_integrand); }
BENCHMARK(BM_ClassicalIntegrand);

void BM_Estimate(benchmark::State& state) {
    const Method method = kIntegralMethods[state.range(0)];
    const double tol = std::pow(10.0, -static_cast<double>(state.range(1)));
    std::int64_t evaluations = 0;
    for (auto _ : state) {
        const ConstantEstimate e = estimate(method, tol);
        evaluations = e.evaluations;
        benchmark::DoNotOptimize(e.ln_A);
    }
    state.SetLabel(std::string(to_string(method)));
    state.counters["evaluations"] = static_cast<double>(evaluations);
}
BENCHMARK(BM_Estimate)->ArgsProduct({{0, 1, 2, 3}, {6, 9, 12}});

void BM_LimitSequenceTerm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(glaisher_seq_log_term(state.range(0)));
}
BENCHMARK(BM_LimitSequenceTerm)->Arg(100)->Arg(800)->Arg(10'000);

}  // namespace

BENCHMARK_MAIN();
