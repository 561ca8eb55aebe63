// Hot-path timings: the adaptive slab-kernel quadrature in its main regimes,
// the assembled rate, and the closed-form helpers it competes against.
#include <benchmark/benchmark.h>

#include <complex>

#include "filmdecay/limits.hpp"
#include "filmdecay/quad.hpp"
#include "filmdecay/rates.hpp"

using namespace filmdecay;

namespace {

// Near-field thin superconducting film: the evanescent segment dominates and
// the geometric mesh carries most of the work.
void slab_integrals_near_field(benchmark::State& state) {
    const complexd eps{1.0 - 1e6, 2e4};
    const SlabGeometry geo = SlabGeometry::dimensionless(1e-3, 2e-6);
    for (auto _ : state) {
        SlabIntegrals ints = magnetic_integrals(eps, geo);
        benchmark::DoNotOptimize(ints.par);
    }
}
BENCHMARK(slab_integrals_near_field);

// Lossy metal half-space at mid-range kz: both segments contribute.
void slab_integrals_midrange(benchmark::State& state) {
    const complexd eps{-100.0, 50.0};
    const SlabGeometry geo = SlabGeometry::dimensionless(0.3, infinite_thickness);
    for (auto _ : state) {
        SlabIntegrals ints = magnetic_integrals(eps, geo);
        benchmark::DoNotOptimize(ints.par);
    }
}
BENCHMARK(slab_integrals_midrange);

// Large kz: the oscillation-capped propagating mesh is the cost driver.
void slab_integrals_oscillatory(benchmark::State& state) {
    const complexd eps{-100.0, 50.0};
    const SlabGeometry geo = SlabGeometry::dimensionless(50.0, 10.0);
    for (auto _ : state) {
        SlabIntegrals ints = magnetic_integrals(eps, geo);
        benchmark::DoNotOptimize(ints.perp);
    }
}
BENCHMARK(slab_integrals_oscillatory);

void total_rate_two_fluid(benchmark::State& state) {
    const TransitionSpec spec = TransitionSpec::from_frequency(560e3, TransitionKind::Magnetic);
    const OrientationWeights ori{0.0, 0.5, 0.5};
    const MediumModel model{TwoFluid{100e-9, 1e-3}, {}};
    const SlabGeometry geo = SlabGeometry::physical(50e-6, 1e-6, spec);
    const ThermalEnvironment env{4.2};
    for (auto _ : state) {
        RateResult r = total_rate(spec, ori, model, geo, env);
        benchmark::DoNotOptimize(r.total);
    }
}
BENCHMARK(total_rate_two_fluid);

void closed_form_ratio(benchmark::State& state) {
    const OrientationWeights ori{0.0, 0.5, 0.5};
    double kz = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pc_ratio(TransitionKind::Magnetic, ori, kz));
        kz = kz < 10.0 ? kz * 1.01 : 1e-3;  // walk the curve, defeat caching
    }
}
BENCHMARK(closed_form_ratio);

void distance_functions(benchmark::State& state) {
    double kz = 1e-4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_parallel(kz));
        benchmark::DoNotOptimize(f_perpendicular(kz));
        kz = kz < 100.0 ? kz * 1.003 : 1e-4;  // crosses the series/direct branch
    }
}
BENCHMARK(distance_functions);

} // namespace

BENCHMARK_MAIN();
