#ifndef GHOSTSIM_PDC_SOURCE_HPP
#define GHOSTSIM_PDC_SOURCE_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "ghostsim/lattice.hpp"

namespace ghostsim {

enum class SourceModel { PlaneWave, GaussianPump };

/// Parametric down-conversion source. Signal and idler are degenerate and
/// share k and k'' (collinear phase matching, no walk-off); the pump is
/// classical and undepleted.
struct SourceParams {
    double crystal_length = 4e-3;    // l_c, m
    double k_medium = 1.5625e7;      // wavenumber of the down-converted field in the crystal, 1/m
    double gvd = 2.3e-22;            // k'', s^2/m (signed)
    double sigma_p = 750.0;          // pump gain parameter, 1/m (sigma_p * l_c = dimensionless gain)
    double pump_waist = 600e-6;      // w0, m
    double pump_duration = 1.5e-12;  // tau0, s
    SourceModel model = SourceModel::PlaneWave;
    int nz = 200;                    // split-step count for the Gaussian-pump model
    double n1 = 1.65;                // signal refractive index
    double n2 = 1.55;                // idler refractive index

    double gain() const { return sigma_p * crystal_length; }
    double q0() const { return std::sqrt(k_medium / crystal_length); }
    double x_coh() const { return 1.0 / q0(); }
    double omega0() const { return 1.0 / std::sqrt(std::abs(gvd) * crystal_length); }
    double tau_coh() const { return 1.0 / omega0(); }
    double pump_bandwidth() const { return 2.0 / pump_waist; }  // delta q_p
};

/// Sampled gain functions over the (q, Omega) lattice.
/// Unitarity: |U|^2 - |V|^2 = 1 at every point.
struct GainTable {
    LatticeSpec spec;
    std::vector<std::complex<double>> U;
    std::vector<std::complex<double>> V;
    std::vector<std::complex<double>> gamma;  // gamma(q,O) = U(q,O) V(-q,-O)
};

/// One pump shot's output fields at the crystal exit face, in position space.
struct FieldPair {
    ComplexField b1;  // signal
    ComplexField b2;  // idler
};

/// Plane-wave-pump Bogoliubov gain. With the dimensionless phase mismatch
/// d(q,O) = l_c (k'' O^2 - |q|^2/k) and per-crystal gain g = sigma_p l_c:
///   Gg = sqrt(g^2 - d^2/4)  (continued to imaginary Gg beyond d/2 = g),
///   U = e^{i d/2} [cosh Gg - i (d / 2Gg) sinh Gg],
///   V = e^{i d/2} (g / Gg) sinh Gg.
/// The removable singularity at Gg = 0 is handled by the sinh series.
GainTable compute_gain(const SourceParams& params, const LatticeSpec& spec);

/// b_j(q,O) = U(q,O) a_j(q,O) + V(q,O) conj(a_k(-q,-O)), vacuum inputs;
/// result transformed to position space at the crystal exit.
FieldPair generate_shot_plane_wave(const GainTable& gain, ShotRng& rng);

/// Split-step integration of the linear three-wave equations with a
/// classical Gaussian pump envelope exp(-|x|^2/w0^2 - t^2/tau0^2), from
/// vacuum inputs at z=0 to z=l_c.
FieldPair generate_shot_gaussian_pump(const SourceParams& params, const LatticeSpec& spec,
                                      ShotRng& rng);

FieldPair generate_shot(const SourceParams& params, const GainTable& gain, ShotRng& rng);

}  // namespace ghostsim

#endif
