#include "ghostsim/presets.hpp"

namespace ghostsim {

namespace {

ExperimentConfig base_1d()
{
    ExperimentConfig c;  // defaults: 256 x 1 x 16 lattice, plane-wave pump
    return c;
}

ExperimentConfig base_2d()
{
    ExperimentConfig c;
    c.lattice.nx = 128;
    c.lattice.ny = 128;
    c.lattice.nt = 1;
    return c;
}

}  // namespace

std::vector<std::string> preset_names()
{
    return {
        "slit_diffraction", "slit_sa",         "cosine_2d",      "checker_sa",
        "telescope_slit",   "telescope_bucket", "kernel_bandwidth", "letters_pixel",
        "letters_bucket",   "filtered_cosine",  "gaussian_pump_sa",
    };
}

ExperimentConfig preset(const std::string& name)
{
    if (name == "slit_diffraction") {
        // 1D far-field double-slit pattern at a fixed test pixel. Long
        // crystal (narrow q band relative to the grid) plus high-fill slits
        // keep the fixed-pixel estimator variance low enough that 1e4 shots
        // reach eps ~ 0.05; the interference filter drops the temporal bins
        // that carry no gain, only vacuum noise.
        ExperimentConfig c = base_1d();
        c.source.crystal_length_mm = 64.0;
        c.source.sigma_p_per_m = 46.875;  // keeps sigma_p * l_c = 3
        c.object.aperture_px = 112;
        c.object.spacing_px = 128;
        c.detection.filter_domega_omega0 = 2.0;
        c.run.shots = 10000;
        return c;
    }
    if (name == "slit_sa") {
        // Fine double slit whose fringe spectrum extends past the gain
        // cutoff, reconstructed with spatial averaging. Quasi-monochromatic
        // (filtered): the far temporal bins would otherwise phase-match at
        // exactly the sideband wavenumbers and mask the cutoff.
        ExperimentConfig c = base_1d();
        c.detection.mode = "ff_spatial_average";
        c.detection.filter_domega_omega0 = 2.0;
        c.run.shots = 10000;
        return c;
    }
    if (name == "cosine_2d") {
        // 2D cosine grating: x modulation inside the gain bandwidth, y
        // modulation far outside so only the x orders survive.
        ExperimentConfig c = base_2d();
        c.object.type = "cosine2d";
        c.detection.mode = "ff_spatial_average";
        c.run.shots = 400;
        return c;
    }
    if (name == "checker_sa") {
        // Pure phase object; only the SA correlation resolves its spectrum.
        ExperimentConfig c = base_2d();
        c.object.type = "phase_checker";
        c.detection.mode = "ff_spatial_average";
        c.run.shots = 600;
        return c;
    }
    if (name == "telescope_slit") {
        // Near-field image of the slits from the telescope reference arm.
        // Long crystal (x_coh = 64 um = 16 px) keeps the imaging kernel wide
        // relative to the grid; the narrowband filter and the
        // matched reference pupil (carrying the kernel phase, so no extra
        // delta-z is needed) suppress the vacuum-only modes that otherwise
        // dominate the fixed-pixel correlation noise.
        ExperimentConfig c = base_1d();
        c.source.crystal_length_mm = 64.0;
        c.source.sigma_p_per_m = 46.875;  // keeps sigma_p * l_c = 3
        c.object.aperture_px = 20;
        c.object.spacing_px = 80;
        c.detection.mode = "telescope_pixel_x1";
        c.detection.filter_domega_omega0 = 2.0;
        c.detection.stripe_q_cut_q0 = 4.0;
        c.detection.pupil_shape = "object_matched";
        c.detection.delta_z = "manual";
        c.run.shots = 20000;
        return c;
    }
    if (name == "telescope_bucket") {
        ExperimentConfig c = preset("telescope_slit");
        c.detection.mode = "telescope_bucket";
        // The bucket correlation is insensitive to the object weighting of
        // the pupil; the plain source-matched taper images any mask.
        c.detection.pupil_shape = "matched";
        return c;
    }
    if (name == "kernel_bandwidth") {
        // Dense temporal grid for the incoherent-kernel bandwidth study
        // (semi-analytic; Monte Carlo on this grid is expensive).
        ExperimentConfig c = base_1d();
        c.lattice.nt = 64;
        c.detection.mode = "telescope_bucket";
        c.detection.delta_z = "manual";
        c.detection.delta_z_mm = 0.0;
        c.run.shots = 200;
        return c;
    }
    if (name == "letters_pixel" || name == "letters_bucket") {
        // 2D amplitude mask imaged through the telescope arm; the pixel
        // (coherent) and bucket (incoherent) correlations differ visibly.
        ExperimentConfig c = base_2d();
        c.object.type = "letters";
        c.detection.mode =
            (name == "letters_pixel") ? "telescope_pixel_x1" : "telescope_bucket";
        c.run.shots = 800;
        return c;
    }
    if (name == "filtered_cosine") {
        // Square cosine grating plus a focal-plane stripe filter that blocks
        // the y diffraction orders in the reference arm. Fixed-pixel mode:
        // summing over the test pixel would average the filter away on the
        // periodic lattice.
        ExperimentConfig c = base_2d();
        c.object.type = "square_cosine";
        c.object.qx_x_coh = 1.5;
        c.object.qy_x_coh = 1.5;
        c.detection.mode = "ff_fixed_x1";
        c.detection.stripe_q_cut_q0 = 0.75;
        c.run.shots = 2000;
        return c;
    }
    if (name == "gaussian_pump_sa") {
        // Finite pump narrow enough that the SA speed-up is ~10x over the
        // pump-limited bandwidth.
        ExperimentConfig c = base_1d();
        c.lattice.nt = 1;
        c.source.model = "gaussian_pump";
        c.source.nz = 20;
        c.source.pump_waist_um = 203.8;  // 20 / delta-q_PDC: rho_SA ~ 10
        c.detection.mode = "ff_spatial_average";
        c.run.shots = 4000;
        return c;
    }
    throw ConfigError("unknown preset: " + name);
}

}  // namespace ghostsim
