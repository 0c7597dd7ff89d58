#include "ghostsim/oracle.hpp"

#include <cmath>
#include <cstdlib>

#include "ghostsim/fft.hpp"

namespace ghostsim {

namespace {

bool in_band(const LatticeSpec& spec, int it, double domega)
{
    if (spec.nt == 1 || domega < 0.0) return true;
    return std::abs(spec.omega(it)) <= domega * (1.0 + 1e-12);
}

double band_weight(const LatticeSpec& spec)
{
    return (spec.nt == 1) ? 1.0 : spec.domega() / (2.0 * std::numbers::pi);
}

void check_mask(const GainTable& gain, const ObjectMask& obj)
{
    const auto& a = gain.spec;
    const auto& b = obj.spec;
    if (a.nx != b.nx || a.ny != b.ny || a.dx != b.dx || a.dy != b.dy)
        throw ContractViolation("oracle: object mask lattice does not match the gain table");
}

CorrelationMap empty_map(const LatticeSpec& spec)
{
    CorrelationMap map;
    map.nx = spec.nx;
    map.ny = spec.ny;
    map.dx = spec.dx;
    map.dy = spec.dy;
    map.g.assign(spec.transverse_size(), 0.0);
    return map;
}

/// Unitary forward transform of the mask alone.
std::vector<std::complex<double>> mask_spectrum(const ObjectMask& obj)
{
    std::vector<std::complex<double>> tq = obj.t;
    fft::spatial(tq, obj.spec.nx, obj.spec.ny, 1, -1);
    return tq;
}

/// HWHM along +x of an even profile peaked at bin 0, by linear interpolation
/// between neighbouring bins; returns coordinate units (step = dx).
double hwhm_from_origin(const std::vector<double>& prof, double step)
{
    const double half = prof[0] / 2.0;
    if (!(prof[0] > 0.0)) throw ContractViolation("hwhm: profile peak is not positive");
    for (std::size_t i = 1; i < prof.size(); ++i) {
        if (prof[i] <= half) {
            const double frac = (prof[i - 1] - half) / (prof[i - 1] - prof[i]);
            return (static_cast<double>(i - 1) + frac) * step;
        }
    }
    throw ContractViolation("hwhm: profile never drops to half maximum");
}

}  // namespace

std::vector<std::complex<double>> telescope_phase(const LatticeSpec& spec, double delta_z,
                                                  double k)
{
    std::vector<std::complex<double>> phase(spec.transverse_size());
    for (int iy = 0; iy < spec.ny; ++iy)
        for (int ix = 0; ix < spec.nx; ++ix) {
            const double q2 = spec.qx(ix) * spec.qx(ix) + spec.qy(iy) * spec.qy(iy);
            phase[static_cast<std::size_t>(iy) * spec.nx + ix] =
                std::polar(1.0, -q2 * delta_z / (2.0 * k));
        }
    return phase;
}

NearFieldCorrelation near_field_correlation(const GainTable& gain, const SourceParams& params)
{
    const auto& spec = gain.spec;
    NearFieldCorrelation nf;
    nf.spec = spec;
    nf.gamma_xi = gain.gamma;
    // Per-Omega inverse spatial transform; layout matches ComplexField so the
    // batched plan applies directly.
    fft::spatial(nf.gamma_xi, spec.nx, spec.ny, spec.nt, +1);

    // x_coh at the compensated plane: the quadratic gain phase is removed
    // before transforming the Omega = 0 slice, otherwise the chirp inflates
    // the apparent width.
    const auto comp = telescope_phase(spec, auto_delta_z(params), params.k_medium);
    const std::size_t nxy = spec.transverse_size();
    std::vector<std::complex<double>> slice(nxy);
    for (std::size_t i = 0; i < nxy; ++i) slice[i] = gain.gamma[i] * comp[i];
    fft::spatial(slice, spec.nx, spec.ny, 1, +1);
    std::vector<double> prof(static_cast<std::size_t>(spec.nx) / 2 + 1);
    for (std::size_t i = 0; i < prof.size(); ++i) prof[i] = std::abs(slice[i]);
    nf.x_coh = hwhm_from_origin(prof, spec.dx);
    return nf;
}

CorrelationMap oracle_ff(const GainTable& gain, const ObjectMask& obj, int x1_index,
                         double domega)
{
    check_mask(gain, obj);
    const auto& spec = gain.spec;
    const auto tq = mask_spectrum(obj);
    const int ix1 = x1_index % spec.nx;
    const int iy1 = x1_index / spec.nx;
    if (iy1 >= spec.ny) throw ContractViolation("oracle_ff: x1 index outside lattice");

    CorrelationMap map = empty_map(spec);
    const double w = band_weight(spec);
    for (int it = 0; it < spec.nt; ++it) {
        if (!in_band(spec, it, domega)) continue;
        for (int iy = 0; iy < spec.ny; ++iy)
            for (int ix = 0; ix < spec.nx; ++ix) {
                const std::size_t ig = spec.site(LatticeSpec::negated(ix, spec.nx),
                                                 LatticeSpec::negated(iy, spec.ny), it);
                const std::size_t im =
                    static_cast<std::size_t>((iy1 + iy) % spec.ny) * spec.nx +
                    (ix1 + ix) % spec.nx;
                map.g[static_cast<std::size_t>(iy) * spec.nx + ix] +=
                    w * std::norm(gain.gamma[ig] * tq[im]);
            }
    }
    return map;
}

SpatialAverageOracle oracle_ff_sa(const GainTable& gain, const ObjectMask& obj, double domega)
{
    check_mask(gain, obj);
    const auto& spec = gain.spec;
    const auto tq = mask_spectrum(obj);

    // Summing oracle_ff over every test pixel telescopes: the gamma factor
    // decouples from the mask on the cyclic lattice, so the exact SA signal
    // is |T~|^2 times the band-integrated gain power. With a plane-wave pump
    // the "approximate" (infinite-bandwidth) form therefore coincides with it.
    double s = 0.0;
    const double w = band_weight(spec);
    for (int it = 0; it < spec.nt; ++it) {
        if (!in_band(spec, it, domega)) continue;
        for (std::size_t i = 0; i < spec.transverse_size(); ++i)
            s += w * std::norm(gain.gamma[spec.site(0, 0, it) + i]);
    }

    SpatialAverageOracle out{empty_map(spec), empty_map(spec)};
    for (std::size_t i = 0; i < spec.transverse_size(); ++i) {
        const double t2 = std::norm(tq[i]);
        out.exact.g[i] = s * t2;
        out.approximate.g[i] = t2;
    }
    return out;
}

std::vector<std::complex<double>> make_matched_pupil(const GainTable& gain, double q_cut)
{
    const auto& spec = gain.spec;
    std::vector<std::complex<double>> pupil = make_stripe_filter(spec, q_cut);
    double peak = 0.0;
    for (std::size_t i = 0; i < pupil.size(); ++i) {
        if (pupil[i] == std::complex<double>(0.0)) continue;
        const double w = std::abs(gain.gamma[i]) / (std::norm(gain.V[i]) + 0.5);
        peak = std::max(peak, w);
    }
    if (!(peak > 0.0)) throw ContractViolation("make_matched_pupil: no gain inside the pupil");
    for (std::size_t i = 0; i < pupil.size(); ++i) {
        if (pupil[i] == std::complex<double>(0.0)) continue;
        pupil[i] = std::conj(gain.gamma[i]) / ((std::norm(gain.V[i]) + 0.5) * peak);
    }
    return pupil;
}

std::vector<std::complex<double>> make_object_matched_pupil(const GainTable& gain,
                                                            const ObjectMask& obj,
                                                            double q_cut)
{
    check_mask(gain, obj);
    std::vector<std::complex<double>> pupil = make_matched_pupil(gain, q_cut);
    const auto tq = mask_spectrum(obj);
    double peak = 0.0;
    for (std::size_t i = 0; i < pupil.size(); ++i) {
        pupil[i] *= std::norm(tq[i]);
        peak = std::max(peak, std::abs(pupil[i]));
    }
    if (!(peak > 0.0))
        throw ContractViolation("make_object_matched_pupil: object spectrum vanishes in the pupil");
    for (auto& p : pupil) p /= peak;
    return pupil;
}

TelescopeOracle oracle_telescope_pixel(const GainTable& gain, const ObjectMask& obj,
                                       int x1_index, double domega, double delta_z, double k,
                                       std::span<const std::complex<double>> pupil)
{
    check_mask(gain, obj);
    const auto& spec = gain.spec;
    if (!pupil.empty() && pupil.size() != spec.transverse_size())
        throw ContractViolation("oracle_telescope_pixel: pupil size mismatch");
    const int ix1 = x1_index % spec.nx;
    const int iy1 = x1_index / spec.nx;
    if (iy1 >= spec.ny) throw ContractViolation("oracle_telescope_pixel: x1 index outside lattice");

    // Detected amplitude at each Omega: the correlation of the near-field
    // kernel with the mask carrying the fixed-pixel Fourier phase,
    //   A(x2) = sum_x' M(x') Gamma_c(x' - x2),  M(x) = T(x) e^{-i q1 x},
    // evaluated as sqrt(N) inv[ fwd(M)(q) gamma_c(-q) ].
    const std::size_t nxy = spec.transverse_size();
    std::vector<std::complex<double>> m(nxy);
    for (int iy = 0; iy < spec.ny; ++iy)
        for (int ix = 0; ix < spec.nx; ++ix) {
            const double ph = 2.0 * std::numbers::pi *
                              (static_cast<double>(ix) * ix1 / spec.nx +
                               static_cast<double>(iy) * iy1 / spec.ny);
            m[static_cast<std::size_t>(iy) * spec.nx + ix] =
                obj.at(ix, iy) * std::polar(1.0, -ph);
        }
    fft::spatial(m, spec.nx, spec.ny, 1, -1);

    const auto comp = telescope_phase(spec, delta_z, k);
    const double w = band_weight(spec);
    const double root_n = std::sqrt(static_cast<double>(nxy));

    TelescopeOracle out{empty_map(spec), empty_map(spec)};
    out.exact.frequency_order = false;
    out.approximate.frequency_order = false;
    std::vector<std::complex<double>> amp(nxy);
    for (int it = 0; it < spec.nt; ++it) {
        if (!in_band(spec, it, domega)) continue;
        for (int iy = 0; iy < spec.ny; ++iy)
            for (int ix = 0; ix < spec.nx; ++ix) {
                const std::size_t iq = static_cast<std::size_t>(iy) * spec.nx + ix;
                const std::size_t ineg = spec.site(LatticeSpec::negated(ix, spec.nx),
                                                   LatticeSpec::negated(iy, spec.ny), it);
                const std::size_t ineg_t =
                    static_cast<std::size_t>(LatticeSpec::negated(iy, spec.ny)) * spec.nx +
                    LatticeSpec::negated(ix, spec.nx);
                amp[iq] = root_n * m[iq] * gain.gamma[ineg] * comp[ineg_t];
                if (!pupil.empty()) amp[iq] *= pupil[iq];
            }
        fft::spatial(amp, spec.nx, spec.ny, 1, +1);
        for (std::size_t i = 0; i < nxy; ++i) out.exact.g[i] += w * std::norm(amp[i]);
    }
    for (std::size_t i = 0; i < nxy; ++i) out.approximate.g[i] = std::norm(obj.t[i]);
    return out;
}

CorrelationMap oracle_telescope_bucket(const GainTable& gain, const ObjectMask& obj,
                                       double domega, double delta_z, double k,
                                       std::span<const std::complex<double>> pupil)
{
    check_mask(gain, obj);
    const auto& spec = gain.spec;
    if (!pupil.empty() && pupil.size() != spec.transverse_size())
        throw ContractViolation("oracle_telescope_bucket: pupil size mismatch");

    // Summing the pixel oracle over the test detector kills the cross terms,
    // leaving the incoherent image G(x2) = sum_x' |T(x')|^2 Gamma_B(x'-x2)
    // with the compensated squared kernel. gamma depends on |q|^2 only, so
    // Gamma_B is even and the correlation equals a cyclic convolution.
    const std::size_t nxy = spec.transverse_size();
    const auto comp = telescope_phase(spec, delta_z, k);
    const double w = band_weight(spec);

    std::vector<double> kernel(nxy, 0.0);
    std::vector<std::complex<double>> slice(nxy);
    for (int it = 0; it < spec.nt; ++it) {
        if (!in_band(spec, it, domega)) continue;
        for (std::size_t i = 0; i < nxy; ++i) {
            slice[i] = gain.gamma[spec.site(0, 0, it) + i] * comp[i];
            if (!pupil.empty()) slice[i] *= pupil[i];
        }
        fft::spatial(slice, spec.nx, spec.ny, 1, +1);
        for (std::size_t i = 0; i < nxy; ++i) kernel[i] += w * std::norm(slice[i]);
    }

    std::vector<double> t2(nxy);
    for (std::size_t i = 0; i < nxy; ++i) t2[i] = std::norm(obj.t[i]);

    CorrelationMap map = empty_map(spec);
    map.frequency_order = false;
    map.g = cyclic_convolution(t2, kernel, spec.nx, spec.ny);
    return map;
}

BucketKernel gamma_bucket_kernel(const GainTable& gain, double domega)
{
    const auto& spec = gain.spec;
    BucketKernel out;
    out.spec = spec;
    out.values.assign(spec.transverse_size(), 0.0);
    const double w = band_weight(spec);
    std::vector<std::complex<double>> slice(spec.transverse_size());
    for (int it = 0; it < spec.nt; ++it) {
        if (!in_band(spec, it, domega)) continue;
        for (std::size_t i = 0; i < slice.size(); ++i)
            slice[i] = gain.gamma[spec.site(0, 0, it) + i];
        fft::spatial(slice, spec.nx, spec.ny, 1, +1);
        for (std::size_t i = 0; i < slice.size(); ++i) out.values[i] += w * std::norm(slice[i]);
    }
    out.fwhm = profile_fwhm_x(out.values, spec);
    return out;
}

BucketKernel gamma_bucket_kernel(const NearFieldCorrelation& nf, double domega)
{
    const auto& spec = nf.spec;
    BucketKernel out;
    out.spec = spec;
    out.values.assign(spec.transverse_size(), 0.0);
    const double w = band_weight(spec);
    for (int it = 0; it < spec.nt; ++it) {
        if (!in_band(spec, it, domega)) continue;
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += w * std::norm(nf.gamma_xi[spec.site(0, 0, it) + i]);
    }
    out.fwhm = profile_fwhm_x(out.values, spec);
    return out;
}

double profile_fwhm_x(const std::vector<double>& v, const LatticeSpec& spec)
{
    std::vector<double> prof(static_cast<std::size_t>(spec.nx) / 2 + 1);
    for (std::size_t i = 0; i < prof.size(); ++i) prof[i] = v[i];  // iy = 0 row
    return 2.0 * hwhm_from_origin(prof, spec.dx);
}

void apply_reference_mask(CorrelationMap& map, std::span<const std::complex<double>> mask)
{
    if (!map.frequency_order)
        throw ContractViolation("apply_reference_mask: map must be in frequency order");
    if (mask.size() != map.g.size())
        throw ContractViolation("apply_reference_mask: mask size mismatch");
    for (std::size_t i = 0; i < map.g.size(); ++i) map.g[i] *= std::norm(mask[i]);
}

CorrelationMap ift_reconstruct(const CorrelationMap& map)
{
    std::vector<std::complex<double>> buf(map.g.begin(), map.g.end());
    fft::spatial(buf, map.nx, map.ny, 1, +1);
    CorrelationMap out = map;
    for (std::size_t i = 0; i < buf.size(); ++i) out.g[i] = buf[i].real();
    return out;
}

double bandwidth_pdc(const GainTable& gain, double domega)
{
    const auto& spec = gain.spec;
    std::vector<double> prof(static_cast<std::size_t>(spec.nx) / 2 + 1, 0.0);
    const double w = band_weight(spec);
    for (int it = 0; it < spec.nt; ++it) {
        if (!in_band(spec, it, domega)) continue;
        for (std::size_t ix = 0; ix < prof.size(); ++ix)
            prof[ix] += w * std::norm(gain.gamma[spec.site(static_cast<int>(ix), 0, it)]);
    }
    return hwhm_from_origin(prof, spec.dqx());
}

}  // namespace ghostsim
