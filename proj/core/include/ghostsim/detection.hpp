#ifndef GHOSTSIM_DETECTION_HPP
#define GHOSTSIM_DETECTION_HPP

#include <vector>

#include "ghostsim/lattice.hpp"

namespace ghostsim {

/// Time-averaged intensity per transverse site (mode-amplitude-squared units).
struct IntensityFrame {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;
    double dy = 0.0;
    std::vector<double> I;
    long shot = -1;
    bool vacuum_corrected = false;
    double clamped_mass = 0.0;  // total mass removed by the correction clamp

    double pixel_area() const { return (ny == 1) ? dx : dx * dy; }
};

/// I(x) = (1/Nt) sum_t |c(x,t)|^2. The detection window is the full
/// temporal grid (T_D >> tau_coh).
IntensityFrame detect(const ComplexField& c);

/// B = sum_x I(x) dA.
double bucket(const IntensityFrame& frame);

/// Subtract the analytic symmetric-ordering vacuum expectation (1/2 per
/// mode per site), clamping at 0. Valid once per frame; the clamped mass is
/// recorded on the result.
IntensityFrame vacuum_correction(const IntensityFrame& frame, const LatticeSpec& spec);

}  // namespace ghostsim

#endif
