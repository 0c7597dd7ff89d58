#include "ghostsim/pdc_source.hpp"

#include <cmath>

namespace ghostsim {

namespace {

using cd = std::complex<double>;

// cosh/sinh of the (possibly imaginary) gain argument, with the removable
// singularity sinh(G)/G -> 1 handled by series.
void gain_point(double g, double delta, cd& U, cd& V)
{
    const cd Gg = std::sqrt(cd(g * g - 0.25 * delta * delta));
    cd sinhc;  // sinh(Gg)/Gg
    if (std::abs(Gg) < 1e-6) {
        const cd g2 = Gg * Gg;
        sinhc = 1.0 + g2 / 6.0 + g2 * g2 / 120.0;
    } else {
        sinhc = std::sinh(Gg) / Gg;
    }
    const cd phase = std::exp(cd(0.0, 0.5 * delta));
    U = phase * (std::cosh(Gg) - cd(0.0, 0.5 * delta) * sinhc);
    V = phase * (g * sinhc);
}

}  // namespace

GainTable compute_gain(const SourceParams& params, const LatticeSpec& spec)
{
    if (params.crystal_length <= 0 || params.k_medium <= 0)
        throw ConfigError("compute_gain: crystal length and wavenumber must be positive");

    GainTable table;
    table.spec = spec;
    table.U.resize(spec.size());
    table.V.resize(spec.size());
    table.gamma.resize(spec.size());

    const double g = params.gain();
    const double lc = params.crystal_length;
    for (int it = 0; it < spec.nt; ++it) {
        const double om = spec.omega(it);
        for (int iy = 0; iy < spec.ny; ++iy) {
            const double qy = spec.qy(iy);
            for (int ix = 0; ix < spec.nx; ++ix) {
                const double qx = spec.qx(ix);
                const double q2 = qx * qx + qy * qy;
                const double delta = lc * (params.gvd * om * om - q2 / params.k_medium);
                gain_point(g, delta, table.U[spec.site(ix, iy, it)],
                           table.V[spec.site(ix, iy, it)]);
            }
        }
    }

    // gamma(q,O) = U(q,O) V(-q,-O); the mismatch is even in (q,O) so this
    // equals U V pointwise, but we index explicitly per the definition.
    for (int it = 0; it < spec.nt; ++it) {
        const int jt = LatticeSpec::negated(it, spec.nt);
        for (int iy = 0; iy < spec.ny; ++iy) {
            const int jy = LatticeSpec::negated(iy, spec.ny);
            for (int ix = 0; ix < spec.nx; ++ix) {
                const int jx = LatticeSpec::negated(ix, spec.nx);
                table.gamma[spec.site(ix, iy, it)] =
                    table.U[spec.site(ix, iy, it)] * table.V[spec.site(jx, jy, jt)];
            }
        }
    }
    return table;
}

FieldPair generate_shot_plane_wave(const GainTable& gain, ShotRng& rng)
{
    const LatticeSpec& spec = gain.spec;
    ComplexField a1 = sample_vacuum(spec, rng, SpaceDomain::Frequency, TimeDomain::Frequency);
    ComplexField a2 = sample_vacuum(spec, rng, SpaceDomain::Frequency, TimeDomain::Frequency);

    ComplexField b1(spec, SpaceDomain::Frequency, TimeDomain::Frequency);
    ComplexField b2(spec, SpaceDomain::Frequency, TimeDomain::Frequency);
    for (int it = 0; it < spec.nt; ++it) {
        const int jt = LatticeSpec::negated(it, spec.nt);
        for (int iy = 0; iy < spec.ny; ++iy) {
            const int jy = LatticeSpec::negated(iy, spec.ny);
            for (int ix = 0; ix < spec.nx; ++ix) {
                const int jx = LatticeSpec::negated(ix, spec.nx);
                const auto i = spec.site(ix, iy, it);
                const auto j = spec.site(jx, jy, jt);
                b1[i] = gain.U[i] * a1[i] + gain.V[i] * std::conj(a2[j]);
                b2[i] = gain.U[i] * a2[i] + gain.V[i] * std::conj(a1[j]);
            }
        }
    }
    return {inverse_transform(b1), inverse_transform(b2)};
}

FieldPair generate_shot_gaussian_pump(const SourceParams& params, const LatticeSpec& spec,
                                      ShotRng& rng)
{
    if (params.nz < 1) throw ConfigError("generate_shot_gaussian_pump: nz must be >= 1");
    const double dz = params.crystal_length / params.nz;
    if (params.sigma_p * dz >= 0.5)
        throw ConfigError("generate_shot_gaussian_pump: sigma_p*dz >= 0.5, increase nz");

    ComplexField a1 = sample_vacuum(spec, rng);
    ComplexField a2 = sample_vacuum(spec, rng);

    // Half-step linear propagator in (q,Omega): exp(i dz/2 (k'' O^2/2 - q^2/2k)).
    std::vector<cd> half(spec.size());
    for (int it = 0; it < spec.nt; ++it) {
        const double om = spec.omega(it);
        for (int iy = 0; iy < spec.ny; ++iy) {
            const double qy = spec.qy(iy);
            for (int ix = 0; ix < spec.nx; ++ix) {
                const double qx = spec.qx(ix);
                const double q2 = qx * qx + qy * qy;
                const double phase =
                    0.5 * dz * (0.5 * params.gvd * om * om - 0.5 * q2 / params.k_medium);
                half[spec.site(ix, iy, it)] = std::exp(cd(0.0, phase));
            }
        }
    }

    // Local two-mode squeeze strength per full step.
    std::vector<double> ch(spec.size()), sh(spec.size());
    const double w2 = params.pump_waist * params.pump_waist;
    const double t2 = params.pump_duration * params.pump_duration;
    for (int it = 0; it < spec.nt; ++it) {
        const double t = spec.t(it);
        for (int iy = 0; iy < spec.ny; ++iy) {
            const double y = spec.y(iy);
            for (int ix = 0; ix < spec.nx; ++ix) {
                const double x = spec.x(ix);
                const double alpha = std::exp(-(x * x + y * y) / w2 - t * t / t2);
                const double s = params.sigma_p * alpha * dz;
                ch[spec.site(ix, iy, it)] = std::cosh(s);
                sh[spec.site(ix, iy, it)] = std::sinh(s);
            }
        }
    }

    auto linear_half = [&](ComplexField& f) {
        spatial_forward(f);
        temporal_forward(f);
        for (std::size_t i = 0; i < f.values().size(); ++i) f[i] *= half[i];
        temporal_inverse(f);
        spatial_inverse(f);
    };

    for (int step = 0; step < params.nz; ++step) {
        linear_half(a1);
        linear_half(a2);
        for (std::size_t i = 0; i < a1.values().size(); ++i) {
            const cd u1 = a1[i], u2 = a2[i];
            a1[i] = ch[i] * u1 + sh[i] * std::conj(u2);
            a2[i] = ch[i] * u2 + sh[i] * std::conj(u1);
        }
        linear_half(a1);
        linear_half(a2);
    }
    return {std::move(a1), std::move(a2)};
}

FieldPair generate_shot(const SourceParams& params, const GainTable& gain, ShotRng& rng)
{
    if (params.model == SourceModel::PlaneWave)
        return generate_shot_plane_wave(gain, rng);
    return generate_shot_gaussian_pump(params, gain.spec, rng);
}

}  // namespace ghostsim
