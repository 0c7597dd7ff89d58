#include "ghostsim/optics.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>

namespace ghostsim {

namespace {

using cd = std::complex<double>;

ObjectMask blank(const LatticeSpec& spec, const std::string& desc)
{
    ObjectMask m;
    m.spec = spec;
    m.t.assign(spec.transverse_size(), cd(0.0));
    m.descriptor = desc;
    return m;
}

}  // namespace

ObjectMask make_uniform(const LatticeSpec& spec)
{
    ObjectMask m = blank(spec, "uniform");
    for (auto& v : m.t) v = 1.0;
    return m;
}

ObjectMask make_double_slit(const LatticeSpec& spec, int aperture_px, int spacing_px,
                            int length_y_px)
{
    if (aperture_px < 1 || spacing_px < 1)
        throw ConfigError("double_slit: aperture and spacing must be >= 1 px");
    if (spacing_px + aperture_px >= spec.nx)
        throw ConfigError("double_slit: mask exceeds lattice extent");
    ObjectMask m = blank(spec, "double_slit(aperture=" + std::to_string(aperture_px) +
                                   "px, spacing=" + std::to_string(spacing_px) + "px)");
    const int c1 = spec.nx / 2 - spacing_px / 2;
    const int c2 = c1 + spacing_px;
    const int y0 = (length_y_px > 0) ? spec.ny / 2 - length_y_px / 2 : 0;
    const int y1 = (length_y_px > 0) ? y0 + length_y_px : spec.ny;
    if (y0 < 0 || y1 > spec.ny) throw ConfigError("double_slit: slit length exceeds lattice");
    for (int iy = y0; iy < y1; ++iy)
        for (int c : {c1, c2})
            for (int ix = c - aperture_px / 2; ix < c - aperture_px / 2 + aperture_px; ++ix)
                m.t[static_cast<std::size_t>(iy) * spec.nx + ix] = 1.0;
    return m;
}

namespace {

ObjectMask cosine_mask(const LatticeSpec& spec, double qx, double qy, const std::string& desc)
{
    ObjectMask m = blank(spec, desc);
    for (int iy = 0; iy < spec.ny; ++iy) {
        const double fy = 1.0 + std::cos(qy * spec.y(iy));
        for (int ix = 0; ix < spec.nx; ++ix) {
            const double fx = 1.0 + std::cos(qx * spec.x(ix));
            m.t[static_cast<std::size_t>(iy) * spec.nx + ix] = 0.25 * fx * fy;
        }
    }
    return m;
}

}  // namespace

ObjectMask make_cosine2d(const LatticeSpec& spec, double qx, double qy)
{
    return cosine_mask(spec, qx, qy, "cosine2d");
}

ObjectMask make_square_cosine(const LatticeSpec& spec, double qx, double qy)
{
    return cosine_mask(spec, qx, qy, "square_cosine");
}

ObjectMask make_phase_checker(const LatticeSpec& spec, int hole_px, int holes_per_side,
                              double envelope_waist, bool with_envelope)
{
    const int pitch = 2 * hole_px;
    const int extent = holes_per_side * pitch;
    if (extent > spec.nx || (spec.ny > 1 && extent > spec.ny))
        throw ConfigError("phase_checker: hole pattern exceeds lattice extent");
    ObjectMask m = blank(spec, "phase_checker(hole=" + std::to_string(hole_px) + "px)");
    const int x0 = spec.nx / 2 - extent / 2;
    const int y0 = (spec.ny > 1) ? spec.ny / 2 - extent / 2 : 0;
    const double w2 = envelope_waist * envelope_waist;
    for (int iy = 0; iy < spec.ny; ++iy) {
        for (int ix = 0; ix < spec.nx; ++ix) {
            double v = 1.0;
            const int lx = ix - x0, ly = iy - y0;
            const bool in_x = lx >= 0 && lx < extent && (lx % pitch) < hole_px;
            const bool in_y = spec.ny == 1 || (ly >= 0 && ly < extent && (ly % pitch) < hole_px);
            if (in_x && in_y) v = -1.0;
            if (with_envelope) {
                const double x = spec.x(ix), y = spec.y(iy);
                v *= std::exp(-(x * x + y * y) / w2);
            }
            m.t[static_cast<std::size_t>(iy) * spec.nx + ix] = v;
        }
    }
    return m;
}

namespace {

// 5x7 glyphs for the letter masks; rows top to bottom, bit 4 = leftmost.
const std::map<char, std::array<unsigned char, 7>>& glyphs()
{
    static const std::map<char, std::array<unsigned char, 7>> g = {
        {'I', {0x1f, 0x04, 0x04, 0x04, 0x04, 0x04, 0x1f}},
        {'N', {0x11, 0x19, 0x19, 0x15, 0x13, 0x13, 0x11}},
        {'F', {0x1f, 0x10, 0x10, 0x1e, 0x10, 0x10, 0x10}},
        {'M', {0x11, 0x1b, 0x15, 0x15, 0x11, 0x11, 0x11}},
        {'G', {0x0e, 0x11, 0x10, 0x17, 0x11, 0x11, 0x0e}},
        {'O', {0x0e, 0x11, 0x11, 0x11, 0x11, 0x11, 0x0e}},
        {'S', {0x0f, 0x10, 0x10, 0x0e, 0x01, 0x01, 0x1e}},
        {'T', {0x1f, 0x04, 0x04, 0x04, 0x04, 0x04, 0x04}},
    };
    return g;
}

}  // namespace

ObjectMask make_letters(const LatticeSpec& spec, const std::string& text, int scale_px)
{
    if (text.empty() || scale_px < 1) throw ConfigError("letters: empty text or bad scale");
    const int n = static_cast<int>(text.size());
    const int width = (n * 5 + (n - 1)) * scale_px;  // one glyph column of spacing
    const int height = 7 * scale_px;
    if (width > spec.nx || height > spec.ny)
        throw ConfigError("letters: text exceeds lattice extent");
    ObjectMask m = blank(spec, "letters(" + text + ")");
    const int x0 = spec.nx / 2 - width / 2;
    const int y0 = spec.ny / 2 - height / 2;
    for (int li = 0; li < n; ++li) {
        auto it = glyphs().find(text[li]);
        if (it == glyphs().end())
            throw ConfigError(std::string("letters: no glyph for '") + text[li] + "'");
        const auto& rows = it->second;
        for (int r = 0; r < 7; ++r)
            for (int c = 0; c < 5; ++c)
                if (rows[r] & (1 << (4 - c)))
                    for (int sy = 0; sy < scale_px; ++sy)
                        for (int sx = 0; sx < scale_px; ++sx) {
                            const int ix = x0 + (li * 6 + c) * scale_px + sx;
                            const int iy = y0 + r * scale_px + sy;
                            m.t[static_cast<std::size_t>(iy) * spec.nx + ix] = 1.0;
                        }
    }
    return m;
}

ObjectMask load_pgm_mask(const LatticeSpec& spec, const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("load_pgm_mask: cannot open " + path);
    std::string magic;
    in >> magic;
    if (magic != "P5") throw ConfigError("load_pgm_mask: not a binary PGM (P5): " + path);
    auto next_int = [&in, &path]() {
        // skip whitespace and '#' comments
        while (true) {
            int c = in.peek();
            if (c == '#') {
                std::string line;
                std::getline(in, line);
            } else if (std::isspace(c)) {
                in.get();
            } else {
                break;
            }
        }
        long v = -1;
        in >> v;
        if (!in || v < 0) throw ConfigError("load_pgm_mask: malformed header in " + path);
        return v;
    };
    const long w = next_int(), h = next_int(), maxval = next_int();
    if (maxval > 255) throw ConfigError("load_pgm_mask: only 8-bit PGM supported");
    if (w > spec.nx || h > spec.ny) throw ConfigError("load_pgm_mask: bitmap exceeds lattice");
    in.get();  // single whitespace after maxval
    std::vector<unsigned char> data(static_cast<std::size_t>(w) * h);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!in) throw ConfigError("load_pgm_mask: truncated pixel data in " + path);

    ObjectMask m = blank(spec, "bitmap(" + path + ")");
    const int x0 = spec.nx / 2 - static_cast<int>(w) / 2;
    const int y0 = spec.ny / 2 - static_cast<int>(h) / 2;
    for (long r = 0; r < h; ++r)
        for (long c = 0; c < w; ++c)
            if (data[static_cast<std::size_t>(r) * w + c] >= 128)
                m.t[static_cast<std::size_t>(y0 + r) * spec.nx + (x0 + c)] = 1.0;
    return m;
}

// ---------------------------------------------------------------------------

ComplexField propagate_test_ff(const ComplexField& b1, const ObjectMask& obj)
{
    if (b1.space_domain() != SpaceDomain::Position)
        throw ContractViolation("propagate_test_ff: field must be in position space");
    if (!(obj.spec.nx == b1.spec().nx && obj.spec.ny == b1.spec().ny))
        throw ContractViolation("propagate_test_ff: mask/lattice mismatch");
    ComplexField c = b1;
    const auto& s = c.spec();
    for (int it = 0; it < s.nt; ++it)
        for (int iy = 0; iy < s.ny; ++iy)
            for (int ix = 0; ix < s.nx; ++ix)
                c.at(ix, iy, it) *= obj.at(ix, iy);
    spatial_forward(c);
    // Detector-plane position coordinate x1 = q f/k; the lattice is reused.
    c.set_space_domain(SpaceDomain::Position);
    return c;
}

ComplexField propagate_reference_ff(const ComplexField& b2)
{
    if (b2.space_domain() != SpaceDomain::Position)
        throw ContractViolation("propagate_reference_ff: field must be in position space");
    ComplexField c = b2;
    spatial_forward(c);
    c.set_space_domain(SpaceDomain::Position);
    return c;
}

double klyshko_delta_z(const SourceParams& p)
{
    return -(1.0 / p.n1 + 1.0 / p.n2) * std::tanh(p.gain()) / p.sigma_p;
}

double auto_delta_z(const SourceParams& p)
{
    const double g = p.gain();
    return -2.0 * p.crystal_length * (1.0 - std::tanh(g) / (2.0 * g));
}

ComplexField propagate_reference_telescope(const ComplexField& b2, double delta_z, double k)
{
    if (b2.space_domain() != SpaceDomain::Position)
        throw ContractViolation("propagate_reference_telescope: field must be in position space");
    ComplexField c = b2;
    if (delta_z == 0.0) return c;
    spatial_forward(c);
    const auto& s = c.spec();
    for (int it = 0; it < s.nt; ++it)
        for (int iy = 0; iy < s.ny; ++iy) {
            const double qy = s.qy(iy);
            for (int ix = 0; ix < s.nx; ++ix) {
                const double qx = s.qx(ix);
                c.at(ix, iy, it) *= std::exp(cd(0.0, -(qx * qx + qy * qy) * delta_z / (2.0 * k)));
            }
        }
    spatial_inverse(c);
    return c;
}

void apply_interference_filter(ComplexField& f, double domega)
{
    const auto& s = f.spec();
    if (s.nt == 1) return;
    if (domega >= s.omega_nyquist()) return;  // filter wider than the grid: no-op
    const bool was_time = (f.time_domain() == TimeDomain::Time);
    if (was_time) temporal_forward(f);
    for (int it = 0; it < s.nt; ++it) {
        if (std::abs(s.omega(it)) <= domega) continue;
        for (int iy = 0; iy < s.ny; ++iy)
            for (int ix = 0; ix < s.nx; ++ix) f.at(ix, iy, it) = 0.0;
    }
    if (was_time) temporal_inverse(f);
}

ComplexField apply_focal_plane_filter(const ComplexField& b2,
                                      std::span<const std::complex<double>> mask)
{
    if (b2.space_domain() != SpaceDomain::Position)
        throw ContractViolation("apply_focal_plane_filter: field must be in position space");
    const auto& s = b2.spec();
    if (mask.size() != s.transverse_size())
        throw ContractViolation("apply_focal_plane_filter: mask size mismatch");
    ComplexField c = b2;
    spatial_forward(c);
    for (int it = 0; it < s.nt; ++it)
        for (int iy = 0; iy < s.ny; ++iy)
            for (int ix = 0; ix < s.nx; ++ix)
                c.at(ix, iy, it) *= mask[static_cast<std::size_t>(iy) * s.nx + ix];
    spatial_inverse(c);
    return c;
}

std::vector<std::complex<double>> make_stripe_filter(const LatticeSpec& spec, double q_cut)
{
    std::vector<cd> mask(spec.transverse_size(), cd(1.0));
    for (int iy = 0; iy < spec.ny; ++iy)
        for (int ix = 0; ix < spec.nx; ++ix) {
            const double q = (spec.ny > 1) ? spec.qy(iy) : spec.qx(ix);
            if (std::abs(q) > q_cut) mask[static_cast<std::size_t>(iy) * spec.nx + ix] = 0.0;
        }
    return mask;
}

}  // namespace ghostsim
