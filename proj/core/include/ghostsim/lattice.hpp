#ifndef GHOSTSIM_LATTICE_HPP
#define GHOSTSIM_LATTICE_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "ghostsim/errors.hpp"

namespace ghostsim {

/// Discrete transverse/temporal grid with periodic boundaries.
/// All axis sizes must be powers of two.
struct LatticeSpec {
    int nx = 1;
    int ny = 1;   // 1 for 1D runs
    int nt = 1;   // 1 for no-time runs
    double dx = 1.0;  // m
    double dy = 1.0;  // m
    double dt = 1.0;  // s

    LatticeSpec() = default;
    LatticeSpec(int nx_, int ny_, int nt_, double dx_, double dy_, double dt_);

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny * nt; }
    std::size_t transverse_size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t site(int ix, int iy, int it) const
    {
        return (static_cast<std::size_t>(it) * ny + iy) * nx + ix;
    }

    double dqx() const { return 2.0 * std::numbers::pi / (nx * dx); }
    double dqy() const { return 2.0 * std::numbers::pi / (ny * dy); }
    double domega() const { return 2.0 * std::numbers::pi / (nt * dt); }
    double pixel_area() const { return (ny == 1) ? dx : dx * dy; }

    /// Wrapped spatial frequency of bin ix (rad/m); bins above nx/2 are negative.
    double qx(int ix) const { return dqx() * wrap(ix, nx); }
    double qy(int iy) const { return dqy() * wrap(iy, ny); }
    double omega(int it) const { return domega() * wrap(it, nt); }
    double omega_nyquist() const { return domega() * (nt / 2); }

    /// Centered position coordinate of bin ix (m); origin at bin nx/2.
    double x(int ix) const { return (ix - nx / 2) * dx; }
    double y(int iy) const { return (ny == 1) ? 0.0 : (iy - ny / 2) * dy; }
    double t(int it) const { return (nt == 1) ? 0.0 : (it - nt / 2) * dt; }

    /// Index of the bin carrying frequency -q(i), i.e. (n - i) mod n.
    static int negated(int i, int n) { return i == 0 ? 0 : n - i; }

    bool operator==(const LatticeSpec&) const = default;

private:
    static int wrap(int i, int n) { return (i <= n / 2) ? i : i - n; }
};

enum class SpaceDomain { Position, Frequency };
enum class TimeDomain { Time, Frequency };

/// Complex mode amplitude per lattice site, tagged with the representation
/// it currently lives in. Layout: values[(it*ny + iy)*nx + ix].
class ComplexField {
public:
    ComplexField(const LatticeSpec& spec, SpaceDomain sdom = SpaceDomain::Position,
                 TimeDomain tdom = TimeDomain::Time)
        : spec_(spec), sdom_(sdom), tdom_(tdom), v_(spec.size()) {}

    const LatticeSpec& spec() const { return spec_; }
    SpaceDomain space_domain() const { return sdom_; }
    TimeDomain time_domain() const { return tdom_; }

    std::complex<double>& operator[](std::size_t i) { return v_[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return v_[i]; }
    std::complex<double>& at(int ix, int iy, int it) { return v_[spec_.site(ix, iy, it)]; }
    const std::complex<double>& at(int ix, int iy, int it) const { return v_[spec_.site(ix, iy, it)]; }

    std::vector<std::complex<double>>& values() { return v_; }
    const std::vector<std::complex<double>>& values() const { return v_; }

    double norm_squared() const;

    // Used by the propagation code after it has transformed/retagged data.
    void set_space_domain(SpaceDomain d) { sdom_ = d; }
    void set_time_domain(TimeDomain d) { tdom_ = d; }

private:
    LatticeSpec spec_;
    SpaceDomain sdom_;
    TimeDomain tdom_;
    std::vector<std::complex<double>> v_;
};

// Unitary transforms (convention F(q) = N^{-1/2} sum_x f(x) e^{-iqx};
// inverse uses the conjugate kernel). Domain-tag mismatches throw
// ContractViolation.
void spatial_forward(ComplexField& f);
void spatial_inverse(ComplexField& f);
void temporal_forward(ComplexField& f);
void temporal_inverse(ComplexField& f);
ComplexField forward_transform(const ComplexField& f);   // position/time -> frequency
ComplexField inverse_transform(const ComplexField& f);   // frequency -> position/time

/// Reproducible per-shot random stream: (seed, stream) selects an
/// independent substream regardless of execution order.
class ShotRng {
public:
    ShotRng(std::uint64_t seed, std::uint64_t stream);

    /// Standard normal deviate (Box-Muller; platform-independent given the
    /// underlying integer stream).
    double gaussian();

    /// Circular complex Gaussian with <|a|^2> = 1/2 (half-quantum vacuum).
    std::complex<double> vacuum_amplitude();

private:
    std::uint64_t next_u64();
    double next_unit();  // uniform in (0, 1]

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// I.i.d. vacuum noise on every lattice site, variance 1/2 per mode.
/// The tags only label the representation: the statistics are identical in
/// either domain under the unitary transform.
ComplexField sample_vacuum(const LatticeSpec& spec, ShotRng& rng,
                           SpaceDomain sdom = SpaceDomain::Position,
                           TimeDomain tdom = TimeDomain::Time);

}  // namespace ghostsim

#endif
