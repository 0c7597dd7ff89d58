#ifndef GHOSTSIM_CONFIG_HPP
#define GHOSTSIM_CONFIG_HPP

#include <string>

#include "ghostsim/correlator.hpp"
#include "ghostsim/optics.hpp"
#include "ghostsim/pdc_source.hpp"

namespace ghostsim {

/// Full description of one run, in the units it is written with (key names
/// carry the unit). Round-trips losslessly through save/load.
struct ExperimentConfig {
    struct Lattice {
        int nx = 256;
        int ny = 1;
        int nt = 16;
        double dx_um = 4.0;   // defaults give x_coh / 4 for the stock source
        double dy_um = 4.0;
        double dt_ps = 0.0785;
    } lattice;

    struct Source {
        std::string model = "plane_wave";  // plane_wave | gaussian_pump
        double crystal_length_mm = 4.0;
        double k_medium_per_mm = 15625.0;
        double gvd_ps2_per_m = 230.0;
        double sigma_p_per_m = 750.0;
        double pump_waist_um = 600.0;
        double pump_duration_ps = 1.5;
        int nz = 200;
        double n1 = 1.65;
        double n2 = 1.55;
    } source;

    struct Object {
        std::string type = "double_slit";  // uniform | double_slit | cosine2d |
                                           // square_cosine | phase_checker | letters | pgm
        int aperture_px = 4;
        int spacing_px = 16;
        int length_y_px = 0;
        double qx_x_coh = 1.0;      // modulation frequencies in units of 1/x_coh
        double qy_x_coh = 3.0;
        int hole_px = 4;
        int holes_per_side = 4;
        double envelope_waist_um = 300.0;
        bool with_envelope = true;
        std::string text = "INFM";
        int scale_px = 3;
        std::string pgm_path;
    } object;

    struct Detection {
        std::string mode = "ff_fixed_x1";
        int x1_index = 0;
        double filter_domega_omega0 = -1.0;  // interference filter half-width / Omega_0; <0 = off
        std::string delta_z = "auto";        // auto | klyshko | manual
        double delta_z_mm = 0.0;             // used when delta_z = manual
        double stripe_q_cut_q0 = -1.0;       // focal-plane stripe filter cut / q_0; <0 = off
        std::string pupil_shape = "hard";    // hard | matched (conj-gamma Wiener taper)
        // Off by default: the fluctuation correlation is shift-invariant, and
        // the per-shot clamp would bias it in dim regions.
        bool vacuum_correction = false;
    } detection;

    struct Run {
        long shots = 2000;
        unsigned long long seed = 1;
        int threads = 0;  // 0 = hardware concurrency
        std::string out_dir = "out";
    } run;

    // SI-unit views used by the physics layer.
    LatticeSpec lattice_spec() const;
    SourceParams source_params() const;
    ObjectMask make_object() const;
    CorrelatorMode mode() const;
    double filter_domega() const;  // rad/s, or -1 for off
    double delta_z_m() const;
    double stripe_q_cut() const;   // rad/m, or -1 for off
};

ExperimentConfig parse_config(const std::string& text);
std::string serialize_config(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::string& path);
void save_config(const ExperimentConfig& cfg, const std::string& path);

}  // namespace ghostsim

#endif
