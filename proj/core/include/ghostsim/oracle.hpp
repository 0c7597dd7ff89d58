#ifndef GHOSTSIM_ORACLE_HPP
#define GHOSTSIM_ORACLE_HPP

#include <complex>
#include <span>
#include <vector>

#include "ghostsim/correlator.hpp"
#include "ghostsim/optics.hpp"
#include "ghostsim/pdc_source.hpp"

namespace ghostsim {

// Semi-analytic references for every closed-form correlation; all are
// deterministic and share the Monte Carlo index conventions, so maps can be
// compared bin by bin (overall constants are absorbed by max-rescaling).

/// Near-field signal/idler correlation Gamma(xi, Omega), the inverse spatial
/// transform of gamma(q, Omega). x_coh is the HWHM of |Gamma(xi, 0)| taken
/// at the compensated imaging plane (quadratic gain phase removed), which is
/// the width that sets the telescope resolution.
struct NearFieldCorrelation {
    LatticeSpec spec;
    std::vector<std::complex<double>> gamma_xi;  // indexed like a field, (xi, Omega)
    double x_coh = 0.0;
};

NearFieldCorrelation near_field_correlation(const GainTable& gain, const SourceParams& params);

/// Reference-arm propagation phase for the telescope oracle; multiplies
/// gamma by exp(-i q^2 delta_z / 2k) per transverse bin.
std::vector<std::complex<double>> telescope_phase(const LatticeSpec& spec, double delta_z,
                                                  double k);

/// f-f correlation at fixed test pixel: G_f(x2) = sum_O |gamma(-x2 k/f, O)
/// T~((x1+x2) k/f)|^2 dO over the filter band. domega < 0 means no filter.
CorrelationMap oracle_ff(const GainTable& gain, const ObjectMask& obj, int x1_index,
                         double domega);

struct SpatialAverageOracle {
    CorrelationMap exact;        // sum over x1 of oracle_ff, computed on the cyclic lattice
    CorrelationMap approximate;  // const * |T~|^2
};

SpatialAverageOracle oracle_ff_sa(const GainTable& gain, const ObjectMask& obj, double domega);

struct TelescopeOracle {
    CorrelationMap exact;
    CorrelationMap approximate;  // |T(x2)|^2 |gamma(x1 k/f, 0)|^2
};

/// Focal-plane pupil matched to the source: conj(gamma(q, 0)) / (|V|^2 + 1/2)
/// inside |q| <= q_cut, peak-normalized. Flattens the kernel phase exactly and
/// tapers band-edge modes, which carry more detector noise than correlation.
std::vector<std::complex<double>> make_matched_pupil(const GainTable& gain, double q_cut);

/// Matched pupil additionally weighted by the object's power spectrum,
/// |T~(q)|^2 conj(gamma(q, 0)) / (|V|^2 + 1/2): a matched spatial filter that
/// blocks frequency bins where the object diffracts no light, which otherwise
/// only add reference-arm noise to the coherent image.
std::vector<std::complex<double>> make_object_matched_pupil(const GainTable& gain,
                                                            const ObjectMask& obj,
                                                            double q_cut);

/// Coherent (pixel-like D1) telescope imaging, Gamma acting as the
/// amplitude kernel at each Omega. An optional reference-arm pupil (focal
/// plane mask in frequency-bin order) multiplies the kernel spectrum.
TelescopeOracle oracle_telescope_pixel(const GainTable& gain, const ObjectMask& obj,
                                       int x1_index, double domega, double delta_z, double k,
                                       std::span<const std::complex<double>> pupil = {});

/// Incoherent (bucket D1) imaging: Gamma_B correlated with |T|^2.
CorrelationMap oracle_telescope_bucket(const GainTable& gain, const ObjectMask& obj,
                                       double domega, double delta_z, double k,
                                       std::span<const std::complex<double>> pupil = {});

/// Frequency-integrated squared kernel Gamma_B(xi) = sum_O |Gamma(xi,O)|^2
/// dO/2pi over the filter band.
struct BucketKernel {
    LatticeSpec spec;
    std::vector<double> values;  // size nx*ny, xi in frequency-bin order
    double fwhm = 0.0;           // along the x axis, m
};

BucketKernel gamma_bucket_kernel(const GainTable& gain, double domega);
BucketKernel gamma_bucket_kernel(const NearFieldCorrelation& nf, double domega);

/// Fold a reference-arm focal-plane mask into a fixed-x1 f-f oracle map:
/// the reference detector bin is the masked frequency bin, so G picks up
/// |mask|^2 pointwise.
void apply_reference_mask(CorrelationMap& map, std::span<const std::complex<double>> mask);

/// Re(inverse transform) of a correlation map; near-field recovery from a
/// reconstructed diffraction pattern.
CorrelationMap ift_reconstruct(const CorrelationMap& map);

/// Imaging bandwidth: HWHM in |q| of the frequency-integrated |gamma|^2
/// along the x axis (rad/m).
double bandwidth_pdc(const GainTable& gain, double domega);

/// FWHM along x of a real transverse map in frequency-bin order (m).
double profile_fwhm_x(const std::vector<double>& v, const LatticeSpec& spec);

}  // namespace ghostsim

#endif
