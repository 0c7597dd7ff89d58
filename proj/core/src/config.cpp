#include "ghostsim/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ghostsim {

LatticeSpec ExperimentConfig::lattice_spec() const
{
    return LatticeSpec(lattice.nx, lattice.ny, lattice.nt, lattice.dx_um * 1e-6,
                       lattice.dy_um * 1e-6, lattice.dt_ps * 1e-12);
}

SourceParams ExperimentConfig::source_params() const
{
    SourceParams p;
    p.crystal_length = source.crystal_length_mm * 1e-3;
    p.k_medium = source.k_medium_per_mm * 1e3;
    p.gvd = source.gvd_ps2_per_m * 1e-24;
    p.sigma_p = source.sigma_p_per_m;
    p.pump_waist = source.pump_waist_um * 1e-6;
    p.pump_duration = source.pump_duration_ps * 1e-12;
    p.nz = source.nz;
    p.n1 = source.n1;
    p.n2 = source.n2;
    if (source.model == "plane_wave")
        p.model = SourceModel::PlaneWave;
    else if (source.model == "gaussian_pump")
        p.model = SourceModel::GaussianPump;
    else
        throw ConfigError("unknown source model: " + source.model);
    return p;
}

ObjectMask ExperimentConfig::make_object() const
{
    const LatticeSpec spec = lattice_spec();
    const SourceParams p = source_params();
    if (object.type == "uniform") return make_uniform(spec);
    if (object.type == "double_slit")
        return make_double_slit(spec, object.aperture_px, object.spacing_px, object.length_y_px);
    if (object.type == "cosine2d")
        return make_cosine2d(spec, object.qx_x_coh * p.q0(), object.qy_x_coh * p.q0());
    if (object.type == "square_cosine")
        return make_square_cosine(spec, object.qx_x_coh * p.q0(), object.qy_x_coh * p.q0());
    if (object.type == "phase_checker")
        return make_phase_checker(spec, object.hole_px, object.holes_per_side,
                                  object.envelope_waist_um * 1e-6, object.with_envelope);
    if (object.type == "letters") return make_letters(spec, object.text, object.scale_px);
    if (object.type == "pgm") return load_pgm_mask(spec, object.pgm_path);
    throw ConfigError("unknown object type: " + object.type);
}

CorrelatorMode ExperimentConfig::mode() const
{
    return correlator_mode_from_string(detection.mode);
}

double ExperimentConfig::filter_domega() const
{
    if (detection.filter_domega_omega0 < 0.0) return -1.0;
    return detection.filter_domega_omega0 * source_params().omega0();
}

double ExperimentConfig::delta_z_m() const
{
    const SourceParams p = source_params();
    if (detection.delta_z == "auto") return auto_delta_z(p);
    if (detection.delta_z == "klyshko") return klyshko_delta_z(p);
    if (detection.delta_z == "manual") return detection.delta_z_mm * 1e-3;
    throw ConfigError("unknown delta_z mode: " + detection.delta_z);
}

double ExperimentConfig::stripe_q_cut() const
{
    if (detection.stripe_q_cut_q0 < 0.0) return -1.0;
    return detection.stripe_q_cut_q0 * source_params().q0();
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

int to_int(const std::string& v, const std::string& key)
{
    try {
        std::size_t pos = 0;
        const int r = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for " + key + ": " + v);
    }
}

long to_long(const std::string& v, const std::string& key)
{
    try {
        std::size_t pos = 0;
        const long r = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for " + key + ": " + v);
    }
}

unsigned long long to_ull(const std::string& v, const std::string& key)
{
    try {
        std::size_t pos = 0;
        const auto r = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("bad integer for " + key + ": " + v);
    }
}

double to_double(const std::string& v, const std::string& key)
{
    try {
        std::size_t pos = 0;
        const double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("bad number for " + key + ": " + v);
    }
}

bool to_bool(const std::string& v, const std::string& key)
{
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("bad boolean for " + key + ": " + v);
}

void apply(ExperimentConfig& c, const std::string& sec, const std::string& key,
           const std::string& val)
{
    auto& L = c.lattice;
    auto& S = c.source;
    auto& O = c.object;
    auto& D = c.detection;
    auto& R = c.run;
    if (sec == "lattice") {
        if (key == "nx") L.nx = to_int(val, key);
        else if (key == "ny") L.ny = to_int(val, key);
        else if (key == "nt") L.nt = to_int(val, key);
        else if (key == "dx_um") L.dx_um = to_double(val, key);
        else if (key == "dy_um") L.dy_um = to_double(val, key);
        else if (key == "dt_ps") L.dt_ps = to_double(val, key);
        else throw ConfigError("unknown key [lattice] " + key);
    } else if (sec == "source") {
        if (key == "model") S.model = val;
        else if (key == "crystal_length_mm") S.crystal_length_mm = to_double(val, key);
        else if (key == "k_medium_per_mm") S.k_medium_per_mm = to_double(val, key);
        else if (key == "gvd_ps2_per_m") S.gvd_ps2_per_m = to_double(val, key);
        else if (key == "sigma_p_per_m") S.sigma_p_per_m = to_double(val, key);
        else if (key == "pump_waist_um") S.pump_waist_um = to_double(val, key);
        else if (key == "pump_duration_ps") S.pump_duration_ps = to_double(val, key);
        else if (key == "nz") S.nz = to_int(val, key);
        else if (key == "n1") S.n1 = to_double(val, key);
        else if (key == "n2") S.n2 = to_double(val, key);
        else throw ConfigError("unknown key [source] " + key);
    } else if (sec == "object") {
        if (key == "type") O.type = val;
        else if (key == "aperture_px") O.aperture_px = to_int(val, key);
        else if (key == "spacing_px") O.spacing_px = to_int(val, key);
        else if (key == "length_y_px") O.length_y_px = to_int(val, key);
        else if (key == "qx_x_coh") O.qx_x_coh = to_double(val, key);
        else if (key == "qy_x_coh") O.qy_x_coh = to_double(val, key);
        else if (key == "hole_px") O.hole_px = to_int(val, key);
        else if (key == "holes_per_side") O.holes_per_side = to_int(val, key);
        else if (key == "envelope_waist_um") O.envelope_waist_um = to_double(val, key);
        else if (key == "with_envelope") O.with_envelope = to_bool(val, key);
        else if (key == "text") O.text = val;
        else if (key == "scale_px") O.scale_px = to_int(val, key);
        else if (key == "pgm_path") O.pgm_path = val;
        else throw ConfigError("unknown key [object] " + key);
    } else if (sec == "detection") {
        if (key == "mode") D.mode = val;
        else if (key == "x1_index") D.x1_index = to_int(val, key);
        else if (key == "filter_domega_omega0") D.filter_domega_omega0 = to_double(val, key);
        else if (key == "delta_z") D.delta_z = val;
        else if (key == "delta_z_mm") D.delta_z_mm = to_double(val, key);
        else if (key == "stripe_q_cut_q0") D.stripe_q_cut_q0 = to_double(val, key);
        else if (key == "pupil_shape") D.pupil_shape = val;
        else if (key == "vacuum_correction") D.vacuum_correction = to_bool(val, key);
        else throw ConfigError("unknown key [detection] " + key);
    } else if (sec == "run") {
        if (key == "shots") R.shots = to_long(val, key);
        else if (key == "seed") R.seed = to_ull(val, key);
        else if (key == "threads") R.threads = to_int(val, key);
        else if (key == "out_dir") R.out_dir = val;
        else throw ConfigError("unknown key [run] " + key);
    } else {
        throw ConfigError("unknown section [" + sec + "]");
    }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text)
{
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line, sec;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section");
            sec = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        if (sec.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
        apply(cfg, sec, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

std::string serialize_config(const ExperimentConfig& c)
{
    std::ostringstream out;
    out.precision(17);
    out << "[lattice]\n"
        << "nx = " << c.lattice.nx << "\n"
        << "ny = " << c.lattice.ny << "\n"
        << "nt = " << c.lattice.nt << "\n"
        << "dx_um = " << c.lattice.dx_um << "\n"
        << "dy_um = " << c.lattice.dy_um << "\n"
        << "dt_ps = " << c.lattice.dt_ps << "\n\n";
    out << "[source]\n"
        << "model = " << c.source.model << "\n"
        << "crystal_length_mm = " << c.source.crystal_length_mm << "\n"
        << "k_medium_per_mm = " << c.source.k_medium_per_mm << "\n"
        << "gvd_ps2_per_m = " << c.source.gvd_ps2_per_m << "\n"
        << "sigma_p_per_m = " << c.source.sigma_p_per_m << "\n"
        << "pump_waist_um = " << c.source.pump_waist_um << "\n"
        << "pump_duration_ps = " << c.source.pump_duration_ps << "\n"
        << "nz = " << c.source.nz << "\n"
        << "n1 = " << c.source.n1 << "\n"
        << "n2 = " << c.source.n2 << "\n\n";
    out << "[object]\n"
        << "type = " << c.object.type << "\n"
        << "aperture_px = " << c.object.aperture_px << "\n"
        << "spacing_px = " << c.object.spacing_px << "\n"
        << "length_y_px = " << c.object.length_y_px << "\n"
        << "qx_x_coh = " << c.object.qx_x_coh << "\n"
        << "qy_x_coh = " << c.object.qy_x_coh << "\n"
        << "hole_px = " << c.object.hole_px << "\n"
        << "holes_per_side = " << c.object.holes_per_side << "\n"
        << "envelope_waist_um = " << c.object.envelope_waist_um << "\n"
        << "with_envelope = " << (c.object.with_envelope ? "true" : "false") << "\n"
        << "text = " << c.object.text << "\n"
        << "scale_px = " << c.object.scale_px << "\n"
        << "pgm_path = " << c.object.pgm_path << "\n\n";
    out << "[detection]\n"
        << "mode = " << c.detection.mode << "\n"
        << "x1_index = " << c.detection.x1_index << "\n"
        << "filter_domega_omega0 = " << c.detection.filter_domega_omega0 << "\n"
        << "delta_z = " << c.detection.delta_z << "\n"
        << "delta_z_mm = " << c.detection.delta_z_mm << "\n"
        << "stripe_q_cut_q0 = " << c.detection.stripe_q_cut_q0 << "\n"
        << "pupil_shape = " << c.detection.pupil_shape << "\n"
        << "vacuum_correction = " << (c.detection.vacuum_correction ? "true" : "false")
        << "\n\n";
    out << "[run]\n"
        << "shots = " << c.run.shots << "\n"
        << "seed = " << c.run.seed << "\n"
        << "threads = " << c.run.threads << "\n"
        << "out_dir = " << c.run.out_dir << "\n";
    return out.str();
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void save_config(const ExperimentConfig& cfg, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write config " + path);
    out << serialize_config(cfg);
}

}  // namespace ghostsim
