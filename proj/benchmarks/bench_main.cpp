#include <benchmark/benchmark.h>

#include <complex>

#include "zetasum/arith.hpp"
#include "zetasum/formulas.hpp"
#include "zetasum/perron.hpp"
#include "zetasum/quadrature.hpp"
#include "zetasum/zeta.hpp"

using namespace zetasum;
using Id = ArithmeticFunctionId;

namespace {

ZeroCatalog synthetic_catalog(int n) {
    // Realistic ordinate spacing without touching the filesystem.
    ZeroCatalog cat;
    double t = 14.1347251417;
    for (int k = 1; k <= n; ++k) {
        cat.records.push_back({k, t, "synthetic"});
        t += 6.28 / std::log(t);
    }
    return cat;
}

void BM_ZetaCriticalLine(benchmark::State& state) {
    Complex s(0.5, static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zeta(s));
}
BENCHMARK(BM_ZetaCriticalLine)->Arg(15)->Arg(100)->Arg(1000);

void BM_ZetaJet(benchmark::State& state) {
    Complex s(0.5, 14.1347251417);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_jet(s));
}
BENCHMARK(BM_ZetaJet);

void BM_SummatoryTable(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            build_summatory_table(Id::SigmaTau, state.range(0)));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SummatoryTable)->Arg(10000)->Arg(100000)->Complexity();

void BM_SmoothPart(benchmark::State& state) {
    double x = 10.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(smooth_part(Id::TauSquared, x));
        x += 1e-6;
    }
}
BENCHMARK(BM_SmoothPart);

void BM_ZeroTermClosedForm(benchmark::State& state) {
    Complex rho(0.5, 14.1347251417);
    for (auto _ : state)
        benchmark::DoNotOptimize(zero_term(Id::LiouvilleSigma, rho, 10.5));
}
BENCHMARK(BM_ZeroTermClosedForm);

void BM_EvaluatorSum(benchmark::State& state) {
    ZeroCatalog cat = synthetic_catalog(static_cast<int>(state.range(0)));
    ZeroTermEvaluator ev(Id::Lambda_vonMangoldt, cat,
                         static_cast<int>(state.range(0)));
    double x = 97.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ev.sum2re(x));
        x += 1e-6;
    }
}
BENCHMARK(BM_EvaluatorSum)->Arg(100)->Arg(1000);

void BM_LineIntegral(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            integrate_line(Id::Lambda_vonMangoldt, 10.0, 2.0,
                           static_cast<double>(state.range(0))));
}
BENCHMARK(BM_LineIntegral)->Arg(14)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Quadrature(benchmark::State& state) {
    auto f = [](double t) { return std::exp(std::complex<double>(0, 40.0 * t)); };
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_adaptive(f, 0.0, 10.0, {}, 64));
}
BENCHMARK(BM_Quadrature);

}  // namespace

BENCHMARK_MAIN();
