#include <benchmark/benchmark.h>

#include "ghostsim/correlator.hpp"
#include "ghostsim/detection.hpp"
#include "ghostsim/optics.hpp"
#include "ghostsim/pdc_source.hpp"

namespace {

using namespace ghostsim;

LatticeSpec spec_1d() { return LatticeSpec(256, 1, 16, 4e-6, 4e-6, 0.0785e-12); }
LatticeSpec spec_2d() { return LatticeSpec(128, 128, 1, 4e-6, 4e-6, 1e-12); }

void bm_shot_plane_wave_1d(benchmark::State& state)
{
    const SourceParams p;
    const GainTable gain = compute_gain(p, spec_1d());
    std::uint64_t s = 0;
    for (auto _ : state) {
        ShotRng rng(7, s++);
        benchmark::DoNotOptimize(generate_shot_plane_wave(gain, rng));
    }
}
BENCHMARK(bm_shot_plane_wave_1d);

void bm_shot_gaussian_pump_1d(benchmark::State& state)
{
    SourceParams p;
    p.model = SourceModel::GaussianPump;
    p.nz = 20;
    const LatticeSpec spec = spec_1d();
    std::uint64_t s = 0;
    for (auto _ : state) {
        ShotRng rng(7, s++);
        benchmark::DoNotOptimize(generate_shot_gaussian_pump(p, spec, rng));
    }
}
BENCHMARK(bm_shot_gaussian_pump_1d);

void bm_sa_accumulate_2d(benchmark::State& state)
{
    const LatticeSpec spec = spec_2d();
    const SourceParams p;
    const GainTable gain = compute_gain(p, spec);
    ShotRng rng(7, 0);
    const FieldPair fp = generate_shot_plane_wave(gain, rng);
    const ObjectMask obj = make_double_slit(spec, 4, 16);
    const IntensityFrame i1 = detect(propagate_test_ff(fp.b1, obj));
    const IntensityFrame i2 = detect(propagate_reference_ff(fp.b2));
    CorrelationAccumulator acc(CorrelatorMode::FfSpatialAverage, spec);
    for (auto _ : state) acc.accumulate(i1, i2);
}
BENCHMARK(bm_sa_accumulate_2d);

}  // namespace

BENCHMARK_MAIN();
