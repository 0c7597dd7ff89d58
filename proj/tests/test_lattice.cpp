#include <doctest.h>

#include <cmath>
#include <complex>

#include "ghostsim/lattice.hpp"

using namespace ghostsim;

namespace {

ComplexField random_field(const LatticeSpec& spec, std::uint64_t seed)
{
    ShotRng rng(seed, 0);
    ComplexField f(spec);
    for (std::size_t i = 0; i < spec.size(); ++i)
        f[i] = {rng.gaussian(), rng.gaussian()};
    return f;
}

}  // namespace

TEST_CASE("lattice spec validates sizes and steps")
{
    CHECK_NOTHROW(LatticeSpec(8, 4, 2, 1e-6, 1e-6, 1e-12));
    CHECK_THROWS_AS(LatticeSpec(6, 1, 1, 1.0, 1.0, 1.0), ConfigError);
    CHECK_THROWS_AS(LatticeSpec(8, 1, 1, 0.0, 1.0, 1.0), ConfigError);
    CHECK_THROWS_AS(LatticeSpec(8, 1, -2, 1.0, 1.0, 1.0), ConfigError);
}

TEST_CASE("frequency wrapping and negated index")
{
    LatticeSpec s(8, 1, 1, 2.0, 1.0, 1.0);
    CHECK(s.qx(0) == 0.0);
    CHECK(s.qx(1) == doctest::Approx(s.dqx()));
    CHECK(s.qx(7) == doctest::Approx(-s.dqx()));
    CHECK(s.qx(4) == doctest::Approx(4 * s.dqx()));  // Nyquist kept positive
    for (int i = 1; i < 8; ++i) {
        const int j = LatticeSpec::negated(i, 8);
        if (i != 4) CHECK(s.qx(j) == doctest::Approx(-s.qx(i)));
        CHECK(LatticeSpec::negated(j, 8) == i);
    }
    CHECK(LatticeSpec::negated(0, 8) == 0);
}

TEST_CASE("transform round trip is the identity to 1e-12")
{
    LatticeSpec spec(16, 4, 8, 1e-6, 1e-6, 1e-13);
    ComplexField f = random_field(spec, 7);
    ComplexField g = inverse_transform(forward_transform(f));
    double worst = 0.0;
    for (std::size_t i = 0; i < spec.size(); ++i)
        worst = std::max(worst, std::abs(g[i] - f[i]));
    CHECK(worst < 1e-12);
    CHECK(g.space_domain() == SpaceDomain::Position);
    CHECK(g.time_domain() == TimeDomain::Time);
}

TEST_CASE("transforms are unitary (Parseval)")
{
    LatticeSpec spec(32, 1, 4, 1e-6, 1e-6, 1e-13);
    ComplexField f = random_field(spec, 11);
    const double n0 = f.norm_squared();
    ComplexField g = forward_transform(f);
    CHECK(g.norm_squared() == doctest::Approx(n0).epsilon(1e-12));
}

TEST_CASE("delta function transforms to a flat spectrum")
{
    LatticeSpec spec(16, 1, 1, 1e-6, 1.0, 1.0);
    ComplexField f(spec);
    f.at(0, 0, 0) = 1.0;
    spatial_forward(f);
    const double expect = 1.0 / std::sqrt(16.0);
    for (std::size_t i = 0; i < spec.size(); ++i) {
        CHECK(f[i].real() == doctest::Approx(expect).epsilon(1e-12));
        CHECK(std::abs(f[i].imag()) < 1e-14);
    }
}

TEST_CASE("domain tags are enforced")
{
    LatticeSpec spec(8, 1, 2, 1.0, 1.0, 1.0);
    ComplexField f(spec, SpaceDomain::Frequency, TimeDomain::Time);
    CHECK_THROWS_AS(spatial_forward(f), ContractViolation);
    CHECK_NOTHROW(spatial_inverse(f));
    CHECK_THROWS_AS(spatial_inverse(f), ContractViolation);
}

TEST_CASE("shot rng substreams are reproducible and independent")
{
    ShotRng a(42, 3), b(42, 3), c(42, 4);
    bool identical = true, distinct = false;
    for (int i = 0; i < 100; ++i) {
        const double va = a.gaussian();
        identical = identical && (va == b.gaussian());
        distinct = distinct || (va != c.gaussian());
    }
    CHECK(identical);
    CHECK(distinct);
}

TEST_CASE("vacuum sampler has half-quantum variance and no mean")
{
    LatticeSpec spec(64, 1, 16, 1e-6, 1.0, 1e-13);
    std::complex<double> mean = 0.0;
    double var = 0.0;
    const int shots = 200;
    for (int s = 0; s < shots; ++s) {
        ShotRng rng(5, static_cast<std::uint64_t>(s));
        ComplexField f = sample_vacuum(spec, rng);
        for (std::size_t i = 0; i < spec.size(); ++i) {
            mean += f[i];
            var += std::norm(f[i]);
        }
    }
    const double n = static_cast<double>(shots) * static_cast<double>(spec.size());
    CHECK(std::abs(mean) / n < 5e-3);
    CHECK(var / n == doctest::Approx(0.5).epsilon(0.02));
}
