#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "catphase/husimi.hpp"
#include "catphase/quadrature.hpp"
#include "catphase/states.hpp"

namespace {

using namespace catphase;

void BM_QValueCat(benchmark::State& state) {
    const auto cat = make_cat({Complex(std::sqrt(12.0), 0.0), 0.0});
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-3;
        benchmark::DoNotOptimize(q_value(cat, PhasePoint(Complex(x, 0.5))));
    }
}
BENCHMARK(BM_QValueCat);

void BM_QValueKitten(benchmark::State& state) {
    const auto kitten = make_kerr_state({1, static_cast<int>(state.range(0)), Complex(3.0, 0.0)});
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-3;
        benchmark::DoNotOptimize(q_value(kitten, PhasePoint(Complex(x, -0.2))));
    }
}
BENCHMARK(BM_QValueKitten)->Arg(3)->Arg(5)->Arg(8);

void BM_QDecompose(benchmark::State& state) {
    const auto kitten = make_kerr_state({1, 5, Complex(3.0, 0.0)});
    double x = 0.0;
    for (auto _ : state) {
        x += 1e-3;
        benchmark::DoNotOptimize(q_decompose(kitten, PhasePoint(Complex(x, 1.0))));
    }
}
BENCHMARK(BM_QDecompose);

void BM_GaussLegendre(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_legendre(static_cast<int>(state.range(0)), 0.0, 10.0));
    }
}
BENCHMARK(BM_GaussLegendre)->Arg(64)->Arg(256);

void BM_WehrlPD(benchmark::State& state) {
    const auto cat = make_cat({Complex(2.4, 0.0), 0.0});
    const auto quad = PolarQuadrature::product_rule(96, static_cast<int>(state.range(0)), 8.7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wehrl_pd(cat, quad));
    }
}
BENCHMARK(BM_WehrlPD)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_WehrlEntropy(benchmark::State& state) {
    const auto cat = make_cat({Complex(std::sqrt(12.0), 0.0), 0.0});
    const auto quad = default_quadrature(cat, 1e-8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wehrl_entropy(cat, quad).wehrl_entropy);
    }
}
BENCHMARK(BM_WehrlEntropy)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
