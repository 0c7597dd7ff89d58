#include "ghostsim/lattice.hpp"

#include <cmath>

#include "ghostsim/fft.hpp"

namespace ghostsim {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

LatticeSpec::LatticeSpec(int nx_, int ny_, int nt_, double dx_, double dy_, double dt_)
    : nx(nx_), ny(ny_), nt(nt_), dx(dx_), dy(dy_), dt(dt_)
{
    if (!is_pow2(nx) || !is_pow2(ny) || !is_pow2(nt))
        throw ConfigError("lattice sizes must be powers of two");
    if (dx <= 0 || dy <= 0 || dt <= 0)
        throw ConfigError("lattice steps must be strictly positive");
}

double ComplexField::norm_squared() const
{
    double s = 0.0;
    for (const auto& z : v_) s += std::norm(z);
    return s;
}

void spatial_forward(ComplexField& f)
{
    if (f.space_domain() != SpaceDomain::Position)
        throw ContractViolation("spatial_forward: field already in spatial frequency domain");
    const auto& s = f.spec();
    fft::spatial(f.values(), s.nx, s.ny, s.nt, -1);
    f.set_space_domain(SpaceDomain::Frequency);
}

void spatial_inverse(ComplexField& f)
{
    if (f.space_domain() != SpaceDomain::Frequency)
        throw ContractViolation("spatial_inverse: field already in position space");
    const auto& s = f.spec();
    fft::spatial(f.values(), s.nx, s.ny, s.nt, +1);
    f.set_space_domain(SpaceDomain::Position);
}

void temporal_forward(ComplexField& f)
{
    if (f.time_domain() != TimeDomain::Time)
        throw ContractViolation("temporal_forward: field already in temporal frequency domain");
    const auto& s = f.spec();
    fft::temporal(f.values(), s.nx, s.ny, s.nt, -1);
    f.set_time_domain(TimeDomain::Frequency);
}

void temporal_inverse(ComplexField& f)
{
    if (f.time_domain() != TimeDomain::Frequency)
        throw ContractViolation("temporal_inverse: field already in time domain");
    const auto& s = f.spec();
    fft::temporal(f.values(), s.nx, s.ny, s.nt, +1);
    f.set_time_domain(TimeDomain::Time);
}

ComplexField forward_transform(const ComplexField& f)
{
    ComplexField out = f;
    spatial_forward(out);
    temporal_forward(out);
    return out;
}

ComplexField inverse_transform(const ComplexField& f)
{
    ComplexField out = f;
    spatial_inverse(out);
    temporal_inverse(out);
    return out;
}

// ---------------------------------------------------------------------------
// ShotRng: xoshiro256++ seeded through splitmix64(seed, stream).

namespace {

std::uint64_t splitmix64(std::uint64_t& x)
{
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

ShotRng::ShotRng(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t x = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
    for (auto& w : s_) w = splitmix64(x);
}

std::uint64_t ShotRng::next_u64()
{
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double ShotRng::next_unit()
{
    // 53-bit mantissa; map to (0, 1] so log() below is safe.
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
}

double ShotRng::gaussian()
{
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(next_unit()));
    const double theta = 2.0 * std::numbers::pi * next_unit();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

std::complex<double> ShotRng::vacuum_amplitude()
{
    // (g1 + i g2)/2 with g ~ N(0,1): <|a|^2> = 1/2, <a^2> = 0.
    return {0.5 * gaussian(), 0.5 * gaussian()};
}

ComplexField sample_vacuum(const LatticeSpec& spec, ShotRng& rng,
                           SpaceDomain sdom, TimeDomain tdom)
{
    ComplexField f(spec, sdom, tdom);
    for (auto& z : f.values()) z = rng.vacuum_amplitude();
    return f;
}

}  // namespace ghostsim
