#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "ghostsim/correlator.hpp"

using namespace ghostsim;

namespace {

std::vector<IntensityFrame> random_frames(const LatticeSpec& spec, int shots, std::uint64_t seed)
{
    std::vector<IntensityFrame> out;
    for (int s = 0; s < shots; ++s) {
        ShotRng rng(seed, static_cast<std::uint64_t>(s));
        IntensityFrame f;
        f.nx = spec.nx;
        f.ny = spec.ny;
        f.dx = spec.dx;
        f.dy = spec.dy;
        f.I.resize(spec.transverse_size());
        for (auto& v : f.I) v = std::norm(rng.vacuum_amplitude()) + 0.1;
        out.push_back(std::move(f));
    }
    return out;
}

// Plain covariance of two per-shot scalar series, matching the accumulator's
// 1/n normalisation.
double covariance(const std::vector<double>& a, const std::vector<double>& b)
{
    const double n = static_cast<double>(a.size());
    double sa = 0.0, sb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        sab += a[i] * b[i];
    }
    return sab / n - (sa / n) * (sb / n);
}

}  // namespace

TEST_CASE("cyclic convolution matches the direct sum")
{
    const int nx = 4, ny = 2;
    const std::vector<double> a = {1, 2, 3, 4, 5, 6, 7, 8};
    const std::vector<double> b = {0.5, -1, 2, 0, 1, 3, -2, 0.25};
    const auto fast = cyclic_convolution(a, b, nx, ny);
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) {
            double s = 0.0;
            for (int y1 = 0; y1 < ny; ++y1)
                for (int x1 = 0; x1 < nx; ++x1)
                    s += a[y1 * nx + x1] *
                         b[((y - y1 + ny) % ny) * nx + (x - x1 + nx) % nx];
            CHECK(fast[y * nx + x] == doctest::Approx(s).epsilon(1e-12));
        }
}

TEST_CASE("spatial-average map equals the direct sum over test pixels")
{
    const LatticeSpec spec(8, 1, 1, 0.5, 1.0, 1.0);
    const int shots = 24;
    const auto f1 = random_frames(spec, shots, 100);
    const auto f2 = random_frames(spec, shots, 200);

    CorrelationAccumulator acc(CorrelatorMode::FfSpatialAverage, spec);
    for (int s = 0; s < shots; ++s) acc.accumulate(f1[s], f2[s]);
    const CorrelationMap sa = acc.finalize();

    for (int x = 0; x < spec.nx; ++x) {
        double direct = 0.0;
        for (int x1 = 0; x1 < spec.nx; ++x1) {
            const int x2 = (x - x1 + spec.nx) % spec.nx;
            std::vector<double> a(shots), b(shots);
            for (int s = 0; s < shots; ++s) {
                a[s] = f1[s].I[x1];
                b[s] = f2[s].I[x2];
            }
            direct += covariance(a, b) * spec.pixel_area();
        }
        CHECK(std::abs(sa.g[x] - direct) < 1e-10);
    }
}

TEST_CASE("bucket map equals the pixel-pair correlation summed over the bucket")
{
    const LatticeSpec spec(4, 2, 1, 0.5, 0.25, 1.0);
    const int shots = 24;
    const auto f1 = random_frames(spec, shots, 300);
    const auto f2 = random_frames(spec, shots, 400);

    CorrelationAccumulator bucket_acc(CorrelatorMode::TelescopeBucket, spec);
    for (int s = 0; s < shots; ++s) bucket_acc.accumulate(f1[s], f2[s]);
    const CorrelationMap gb = bucket_acc.finalize();

    const std::size_t n = spec.transverse_size();
    for (std::size_t x2 = 0; x2 < n; ++x2) {
        double direct = 0.0;
        for (std::size_t x1 = 0; x1 < n; ++x1) {
            std::vector<double> a(shots), b(shots);
            for (int s = 0; s < shots; ++s) {
                a[s] = f1[s].I[x1];
                b[s] = f2[s].I[x2];
            }
            direct += covariance(a, b) * spec.pixel_area();
        }
        CHECK(std::abs(gb.g[x2] - direct) < 1e-10);
    }
}

TEST_CASE("fixed-pixel map is the covariance against that pixel")
{
    const LatticeSpec spec(8, 1, 1, 1.0, 1.0, 1.0);
    const int shots = 16;
    const auto f1 = random_frames(spec, shots, 500);
    const auto f2 = random_frames(spec, shots, 600);
    const int x1 = 3;

    CorrelationAccumulator acc(CorrelatorMode::FfFixedX1, spec, x1);
    for (int s = 0; s < shots; ++s) acc.accumulate(f1[s], f2[s]);
    const CorrelationMap g = acc.finalize();

    for (int x2 = 0; x2 < spec.nx; ++x2) {
        std::vector<double> a(shots), b(shots);
        for (int s = 0; s < shots; ++s) {
            a[s] = f1[s].I[x1];
            b[s] = f2[s].I[x2];
        }
        CHECK(g.g[x2] == doctest::Approx(covariance(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("merged shards reproduce the single-accumulator result")
{
    const LatticeSpec spec(8, 1, 1, 1.0, 1.0, 1.0);
    const int shots = 30;
    const auto f1 = random_frames(spec, shots, 700);
    const auto f2 = random_frames(spec, shots, 800);

    CorrelationAccumulator whole(CorrelatorMode::FfSpatialAverage, spec);
    CorrelationAccumulator even(CorrelatorMode::FfSpatialAverage, spec);
    CorrelationAccumulator odd(CorrelatorMode::FfSpatialAverage, spec);
    for (int s = 0; s < shots; ++s) {
        whole.accumulate(f1[s], f2[s]);
        (s % 2 == 0 ? even : odd).accumulate(f1[s], f2[s]);
    }
    even.merge(odd);
    CHECK(even.shots() == whole.shots());
    const CorrelationMap a = even.finalize();
    const CorrelationMap b = whole.finalize();
    for (std::size_t i = 0; i < a.g.size(); ++i)
        CHECK(std::abs(a.g[i] - b.g[i]) < 1e-12);
}

TEST_CASE("merge rejects incompatible accumulators")
{
    const LatticeSpec spec(8, 1, 1, 1.0, 1.0, 1.0);
    CorrelationAccumulator a(CorrelatorMode::FfFixedX1, spec, 0);
    CorrelationAccumulator b(CorrelatorMode::FfFixedX1, spec, 1);
    CorrelationAccumulator c(CorrelatorMode::TelescopeBucket, spec);
    CHECK_THROWS_AS(a.merge(b), ContractViolation);
    CHECK_THROWS_AS(a.merge(c), ContractViolation);
}

TEST_CASE("checkpoint save/load preserves the running sums")
{
    const LatticeSpec spec(8, 1, 1, 1.0, 1.0, 1.0);
    const int shots = 10;
    const auto f1 = random_frames(spec, shots, 900);
    const auto f2 = random_frames(spec, shots, 901);
    CorrelationAccumulator acc(CorrelatorMode::TelescopeBucket, spec);
    for (int s = 0; s < shots; ++s) acc.accumulate(f1[s], f2[s]);

    const std::string path = "acc_checkpoint_test.bin";
    acc.save(path);
    CorrelationAccumulator back = CorrelationAccumulator::load(path);
    std::remove(path.c_str());

    CHECK(back.shots() == acc.shots());
    const CorrelationMap a = acc.finalize();
    const CorrelationMap b = back.finalize();
    for (std::size_t i = 0; i < a.g.size(); ++i) CHECK(a.g[i] == b.g[i]);
}

TEST_CASE("finalize needs two shots; rescale needs a positive peak")
{
    const LatticeSpec spec(4, 1, 1, 1.0, 1.0, 1.0);
    CorrelationAccumulator acc(CorrelatorMode::FfFixedX1, spec);
    CHECK_THROWS_AS(acc.finalize(), ContractViolation);

    CorrelationMap flat;
    flat.nx = 2;
    flat.ny = 1;
    flat.g = {-1.0, 0.0};
    CHECK_THROWS_AS(max_rescaled(flat), ContractViolation);
    flat.g = {0.5, 2.0};
    const CorrelationMap r = max_rescaled(flat);
    CHECK(r.g[1] == 1.0);
    CHECK(r.g[0] == doctest::Approx(0.25));
}
