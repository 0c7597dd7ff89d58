#include "ghostsim/correlator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <cmath>
#include <complex>
#include <cstring>
#include <fstream>

#include "ghostsim/fft.hpp"

namespace ghostsim {

std::string to_string(CorrelatorMode mode)
{
    switch (mode) {
        case CorrelatorMode::FfFixedX1: return "ff_fixed_x1";
        case CorrelatorMode::FfSpatialAverage: return "ff_spatial_average";
        case CorrelatorMode::TelescopePixelX1: return "telescope_pixel_x1";
        case CorrelatorMode::TelescopeBucket: return "telescope_bucket";
    }
    return "?";
}

CorrelatorMode correlator_mode_from_string(const std::string& s)
{
    if (s == "ff_fixed_x1") return CorrelatorMode::FfFixedX1;
    if (s == "ff_spatial_average") return CorrelatorMode::FfSpatialAverage;
    if (s == "telescope_pixel_x1") return CorrelatorMode::TelescopePixelX1;
    if (s == "telescope_bucket") return CorrelatorMode::TelescopeBucket;
    throw ConfigError("unknown correlator mode: " + s);
}

double CorrelationMap::max() const
{
    double m = -std::numeric_limits<double>::infinity();
    for (double v : g) m = std::max(m, v);
    return m;
}

CorrelationMap max_rescaled(const CorrelationMap& map)
{
    const double m = map.max();
    if (!(m > 0.0)) throw ContractViolation("max_rescaled: map maximum is not positive");
    CorrelationMap out = map;
    for (double& v : out.g) v /= m;
    return out;
}

std::vector<double> cyclic_convolution(const std::vector<double>& a, const std::vector<double>& b,
                                       int nx, int ny)
{
    const std::size_t n = static_cast<std::size_t>(nx) * ny;
    if (a.size() != n || b.size() != n)
        throw ContractViolation("cyclic_convolution: size mismatch");
    std::vector<std::complex<double>> fa(a.begin(), a.end()), fb(b.begin(), b.end());
    fft::spatial(fa, nx, ny, 1, -1);
    fft::spatial(fb, nx, ny, 1, -1);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
    fft::spatial(fa, nx, ny, 1, +1);
    // Unitary transforms leave a residual 1/sqrt(N) against the plain
    // convolution theorem.
    const double scale = std::sqrt(static_cast<double>(n));
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fa[i].real() * scale;
    return out;
}

CorrelationAccumulator::CorrelationAccumulator(CorrelatorMode mode, const LatticeSpec& spec,
                                               int x1_index)
    : mode_(mode), spec_(spec), x1_index_(x1_index)
{
    const std::size_t n = spec.transverse_size();
    if (x1_index_ < 0 || static_cast<std::size_t>(x1_index_) >= n)
        throw ContractViolation("CorrelationAccumulator: x1 index outside lattice");
    s12_ = KahanVec(n);
    s2_ = KahanVec(n);
    const bool scalar_marginal =
        (mode == CorrelatorMode::FfFixedX1 || mode == CorrelatorMode::TelescopePixelX1 ||
         mode == CorrelatorMode::TelescopeBucket);
    s1_ = KahanVec(scalar_marginal ? 1 : n);
}

void CorrelationAccumulator::accumulate(const IntensityFrame& i1, const IntensityFrame& i2)
{
    const std::size_t n = spec_.transverse_size();
    if (i1.I.size() != n || i2.I.size() != n)
        throw ContractViolation("accumulate: frame/lattice mismatch");
    const double dA = spec_.pixel_area();

    switch (mode_) {
        case CorrelatorMode::FfFixedX1:
        case CorrelatorMode::TelescopePixelX1: {
            const double p = i1.I[static_cast<std::size_t>(x1_index_)];
            for (std::size_t i = 0; i < n; ++i) s12_.add(i, p * i2.I[i]);
            s1_.add(0, p);
            break;
        }
        case CorrelatorMode::TelescopeBucket: {
            const double b = bucket(i1);
            for (std::size_t i = 0; i < n; ++i) s12_.add(i, b * i2.I[i]);
            s1_.add(0, b);
            break;
        }
        case CorrelatorMode::FfSpatialAverage: {
            const auto conv = cyclic_convolution(i1.I, i2.I, spec_.nx, spec_.ny);
            for (std::size_t i = 0; i < n; ++i) s12_.add(i, conv[i] * dA);
            for (std::size_t i = 0; i < n; ++i) s1_.add(i, i1.I[i]);
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) s2_.add(i, i2.I[i]);
    ++n_;
}

void CorrelationAccumulator::merge(const CorrelationAccumulator& other)
{
    if (other.mode_ != mode_ || !(other.spec_ == spec_) || other.x1_index_ != x1_index_)
        throw ContractViolation("merge: incompatible accumulators");
    auto fold = [](KahanVec& a, const KahanVec& b) {
        for (std::size_t i = 0; i < a.sum.size(); ++i) {
            a.add(i, b.sum[i]);
            a.add(i, -b.comp[i]);
        }
    };
    fold(s12_, other.s12_);
    fold(s1_, other.s1_);
    fold(s2_, other.s2_);
    n_ += other.n_;
}

CorrelationMap CorrelationAccumulator::finalize() const
{
    if (n_ < 2) throw ContractViolation("finalize: need at least 2 shots");
    const std::size_t n = spec_.transverse_size();
    const double inv_n = 1.0 / static_cast<double>(n_);
    CorrelationMap map;
    map.nx = spec_.nx;
    map.ny = spec_.ny;
    map.dx = spec_.dx;
    map.dy = spec_.dy;
    map.frequency_order = (mode_ == CorrelatorMode::FfFixedX1 ||
                           mode_ == CorrelatorMode::FfSpatialAverage);
    map.g.assign(n, 0.0);

    if (mode_ == CorrelatorMode::FfSpatialAverage) {
        std::vector<double> m1(n), m2(n);
        for (std::size_t i = 0; i < n; ++i) m1[i] = s1_.sum[i] * inv_n;
        for (std::size_t i = 0; i < n; ++i) m2[i] = s2_.sum[i] * inv_n;
        const auto bg = cyclic_convolution(m1, m2, spec_.nx, spec_.ny);
        const double dA = spec_.pixel_area();
        for (std::size_t i = 0; i < n; ++i) map.g[i] = s12_.sum[i] * inv_n - bg[i] * dA;
    } else {
        const double m1 = s1_.sum[0] * inv_n;
        for (std::size_t i = 0; i < n; ++i)
            map.g[i] = s12_.sum[i] * inv_n - m1 * (s2_.sum[i] * inv_n);
    }
    return map;
}

// ---------------------------------------------------------------------------
// Checkpoint: "GACC" | version | mode | nx ny nt | dx dy dt | x1 | n | sums.

namespace {

template <typename T>
void put(std::ostream& out, const T& v)
{
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in)
{
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw ConfigError("checkpoint: truncated file");
    return v;
}

void put_vec(std::ostream& out, const std::vector<double>& v)
{
    put<std::uint64_t>(out, v.size());
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(double)));
}

std::vector<double> get_vec(std::istream& in)
{
    const auto n = get<std::uint64_t>(in);
    std::vector<double> v(n);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(double)));
    if (!in) throw ConfigError("checkpoint: truncated file");
    return v;
}

}  // namespace

void CorrelationAccumulator::save(const std::string& path) const
{
    static_assert(std::endian::native == std::endian::little,
                  "checkpoint format is little-endian");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("checkpoint: cannot write " + path);
    out.write("GACC", 4);
    put<std::uint32_t>(out, 1);  // version
    put<std::uint32_t>(out, static_cast<std::uint32_t>(mode_));
    put<std::int32_t>(out, spec_.nx);
    put<std::int32_t>(out, spec_.ny);
    put<std::int32_t>(out, spec_.nt);
    put<double>(out, spec_.dx);
    put<double>(out, spec_.dy);
    put<double>(out, spec_.dt);
    put<std::int32_t>(out, x1_index_);
    put<std::int64_t>(out, n_);
    for (const auto* k : {&s12_, &s1_, &s2_}) {
        put_vec(out, k->sum);
        put_vec(out, k->comp);
    }
}

CorrelationAccumulator CorrelationAccumulator::load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("checkpoint: cannot open " + path);
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    if (!in || std::memcmp(magic.data(), "GACC", 4) != 0)
        throw ConfigError("checkpoint: bad magic in " + path);
    if (get<std::uint32_t>(in) != 1) throw ConfigError("checkpoint: unsupported version");
    const auto mode = static_cast<CorrelatorMode>(get<std::uint32_t>(in));
    const int nx = get<std::int32_t>(in);
    const int ny = get<std::int32_t>(in);
    const int nt = get<std::int32_t>(in);
    const double dx = get<double>(in);
    const double dy = get<double>(in);
    const double dt = get<double>(in);
    const int x1 = get<std::int32_t>(in);
    const long n = get<std::int64_t>(in);
    CorrelationAccumulator acc(mode, LatticeSpec(nx, ny, nt, dx, dy, dt), x1);
    for (auto* k : {&acc.s12_, &acc.s1_, &acc.s2_}) {
        k->sum = get_vec(in);
        k->comp = get_vec(in);
    }
    acc.n_ = n;
    return acc;
}

}  // namespace ghostsim
