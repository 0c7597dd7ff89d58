#ifndef GHOSTSIM_OPTICS_HPP
#define GHOSTSIM_OPTICS_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "ghostsim/lattice.hpp"
#include "ghostsim/pdc_source.hpp"

namespace ghostsim {

/// Complex transmission mask over the transverse lattice, |T| <= 1.
struct ObjectMask {
    LatticeSpec spec;
    std::vector<std::complex<double>> t;  // size nx*ny
    std::string descriptor;

    const std::complex<double>& at(int ix, int iy) const
    {
        return t[static_cast<std::size_t>(iy) * spec.nx + ix];
    }
};

// Object presets. Pixel counts refer to lattice sites (pixel = site).
ObjectMask make_uniform(const LatticeSpec& spec);
ObjectMask make_double_slit(const LatticeSpec& spec, int aperture_px, int spacing_px,
                            int length_y_px = 0);
ObjectMask make_cosine2d(const LatticeSpec& spec, double qx, double qy);       // [1+cos(qx x)][1+cos(qy y)]/4
ObjectMask make_square_cosine(const LatticeSpec& spec, double qx, double qy);  // same functional form
ObjectMask make_phase_checker(const LatticeSpec& spec, int hole_px, int holes_per_side,
                              double envelope_waist, bool with_envelope = true);
ObjectMask make_letters(const LatticeSpec& spec, const std::string& text, int scale_px);
ObjectMask load_pgm_mask(const LatticeSpec& spec, const std::string& path);  // 8-bit P5, threshold 128

/// Test arm f-f propagation: multiply by the object mask, then the lens
/// Fourier transform. The output array is indexed by the spatial-frequency
/// bin; the detector coordinate is x1 = q f/k (carried as metadata by the
/// caller, never resampled).
ComplexField propagate_test_ff(const ComplexField& b1, const ObjectMask& obj);

/// Reference arm f-f propagation (no object).
ComplexField propagate_reference_ff(const ComplexField& b2);

/// Telescope reference arm: Fresnel propagation by delta_z (applied as
/// exp(-i|q|^2 dz/2k) in Fourier space), then identity imaging.
ComplexField propagate_reference_telescope(const ComplexField& b2, double delta_z, double k);

/// Klyshko-picture choice: imaging plane pulled back inside the crystal by
/// the unfolded optical path through both refractive indices.
double klyshko_delta_z(const SourceParams& p);

/// Delta z that cancels the quadratic phase of this model's gain near q=0,
/// from the small-mismatch expansion arg(gamma) ~ -(l_c/k)(1 - tanh g / 2g) q^2.
double auto_delta_z(const SourceParams& p);

/// Zero all temporal-frequency components with |Omega| > domega, applied at
/// the crystal exit. No-op when domega >= the grid Nyquist.
void apply_interference_filter(ComplexField& f, double domega);

/// Multiply the spatial spectrum of the reference beam by mask(q); the
/// focal-plane coordinate maps as x = q f/k. mask is indexed like the
/// transverse lattice in frequency order, size nx*ny.
ComplexField apply_focal_plane_filter(const ComplexField& b2,
                                      std::span<const std::complex<double>> mask);

/// Stripe filter blocking |q_y| > q_cut (1D lattices: blocks |q_x| > q_cut).
std::vector<std::complex<double>> make_stripe_filter(const LatticeSpec& spec, double q_cut);

}  // namespace ghostsim

#endif
