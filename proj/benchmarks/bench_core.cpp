#include <benchmark/benchmark.h>

#include <complex>

#include "mqed/damping.hpp"
#include "mqed/evolve.hpp"
#include "mqed/hamiltonian.hpp"
#include "mqed/hilbert.hpp"
#include "mqed/model.hpp"
#include "mqed/squeezing.hpp"

namespace {

using namespace mqed;

void BM_PropagatorBuild(benchmark::State& state) {
    const SpaceSpec space{int(state.range(0))};
    const ModelParams p = make_params(1.0, 11.0, 1.0);
    const Operator h = full_hamiltonian(p, space);
    for (auto _ : state) {
        const Propagator prop(h);
        benchmark::DoNotOptimize(&prop);
    }
    state.SetComplexityN(space.dim());
}
BENCHMARK(BM_PropagatorBuild)->Arg(20)->Arg(40)->Arg(80)->Complexity();

void BM_PropagatorApply(benchmark::State& state) {
    const SpaceSpec space{int(state.range(0))};
    const ModelParams p = make_params(1.0, 11.0, 1.0);
    const Propagator prop(full_hamiltonian(p, space));
    const QuantumState psi = coherent_state(space, std::complex<double>(1.0, 0.0));
    double t = 0.0;
    for (auto _ : state) {
        t += 0.1;
        benchmark::DoNotOptimize(prop.apply(psi, t).amp);
    }
    state.SetComplexityN(space.dim());
}
BENCHMARK(BM_PropagatorApply)->Arg(20)->Arg(40)->Arg(80)->Complexity();

void BM_EvolveSampling(benchmark::State& state) {
    const SpaceSpec space{40};
    const ModelParams p = make_params(1.0, 11.0, 1.0);
    const Operator h = full_hamiltonian(p, space);
    const QuantumState psi = coherent_state(space, std::complex<double>(1.0, 0.0));
    const std::vector<double> grid = linspace(0.0, 10.0, int(state.range(0)));
    const ObservableSet obs = standard_observables(space);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(psi, h, grid, obs).times);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolveSampling)->Arg(101)->Arg(1001);

void BM_SqueezeFactorTrace(benchmark::State& state) {
    const ModelParams p = params_from_ratios(0.1, 0.5);
    const SqueezeParams sp = squeeze_params(p, 0);
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 0; i < 1000; ++i) {
            acc += squeeze_factor(sp, 0.01 * i);
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SqueezeFactorTrace);

void BM_MinQuadratureVariance(benchmark::State& state) {
    const SpaceSpec space{60};
    const QuantumState psi = coherent_state(space, std::complex<double>(1.0, 0.5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_quadrature_variance(psi).variance);
    }
}
BENCHMARK(BM_MinQuadratureVariance);

void BM_LangevinIntegrate(benchmark::State& state) {
    const DampingParams p{0.2, 1.0, 10.0, 0.0};
    const LangevinState initial{10.5, 0.5, 0.0, 0.0};
    const std::vector<double> grid = linspace(0.0, 60.0, int(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(initial, p, grid).times);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LangevinIntegrate)->Arg(100)->Arg(1200);

}  // namespace

BENCHMARK_MAIN();
