#include "ghostsim/detection.hpp"

namespace ghostsim {

IntensityFrame detect(const ComplexField& c)
{
    if (c.space_domain() != SpaceDomain::Position)
        throw ContractViolation("detect: field must be in position space");
    if (c.time_domain() != TimeDomain::Time)
        throw ContractViolation("detect: field must be in the time domain");
    const auto& s = c.spec();
    IntensityFrame f;
    f.nx = s.nx;
    f.ny = s.ny;
    f.dx = s.dx;
    f.dy = s.dy;
    f.I.assign(s.transverse_size(), 0.0);
    const double inv_nt = 1.0 / s.nt;
    for (int it = 0; it < s.nt; ++it)
        for (int iy = 0; iy < s.ny; ++iy)
            for (int ix = 0; ix < s.nx; ++ix)
                f.I[static_cast<std::size_t>(iy) * s.nx + ix] += inv_nt * std::norm(c.at(ix, iy, it));
    return f;
}

double bucket(const IntensityFrame& frame)
{
    double s = 0.0;
    for (double v : frame.I) s += v;
    return s * frame.pixel_area();
}

IntensityFrame vacuum_correction(const IntensityFrame& frame, const LatticeSpec& spec)
{
    if (frame.vacuum_corrected)
        throw ContractViolation("vacuum_correction: frame already corrected");
    if (frame.nx != spec.nx || frame.ny != spec.ny)
        throw ContractViolation("vacuum_correction: frame/lattice mismatch");
    IntensityFrame out = frame;
    out.vacuum_corrected = true;
    for (auto& v : out.I) {
        v -= 0.5;  // half quantum per mode, identical after time averaging
        if (v < 0.0) {
            out.clamped_mass += -v;
            v = 0.0;
        }
    }
    return out;
}

}  // namespace ghostsim
