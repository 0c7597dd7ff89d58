#include "ghostsim/grid_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace ghostsim {

namespace {

template <typename T>
void put(std::ostream& out, const T& v)
{
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in)
{
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw ConfigError("gimg: truncated file");
    return v;
}

}  // namespace

void save_gimg(const CorrelationMap& map, const std::string& path)
{
    static_assert(std::endian::native == std::endian::little, "gimg format is little-endian");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("gimg: cannot write " + path);
    out.write("GIMG", 4);
    put<std::uint32_t>(out, 1);
    put<std::uint32_t>(out, map.frequency_order ? 1u : 0u);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(map.nx));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(map.ny));
    put<double>(out, map.dx);
    put<double>(out, map.dy);
    out.write(reinterpret_cast<const char*>(map.g.data()),
              static_cast<std::streamsize>(map.g.size() * sizeof(double)));
    if (!out) throw ConfigError("gimg: write failed for " + path);
}

CorrelationMap load_gimg(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("gimg: cannot open " + path);
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    if (!in || std::memcmp(magic.data(), "GIMG", 4) != 0)
        throw ConfigError("gimg: bad magic in " + path);
    if (get<std::uint32_t>(in) != 1) throw ConfigError("gimg: unsupported version");
    CorrelationMap map;
    map.frequency_order = get<std::uint32_t>(in) != 0;
    map.nx = static_cast<int>(get<std::uint32_t>(in));
    map.ny = static_cast<int>(get<std::uint32_t>(in));
    map.dx = get<double>(in);
    map.dy = get<double>(in);
    if (map.nx <= 0 || map.ny <= 0 || map.nx > (1 << 20) || map.ny > (1 << 20))
        throw ConfigError("gimg: implausible dimensions in " + path);
    map.g.resize(static_cast<std::size_t>(map.nx) * map.ny);
    in.read(reinterpret_cast<char*>(map.g.data()),
            static_cast<std::streamsize>(map.g.size() * sizeof(double)));
    if (!in) throw ConfigError("gimg: truncated file " + path);
    return map;
}

void save_pgm_preview(const CorrelationMap& map, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("pgm: cannot write " + path);
    double lo = map.g[0], hi = map.g[0];
    for (double v : map.g) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = (hi > lo) ? hi - lo : 1.0;
    out << "P5\n" << map.nx << ' ' << map.ny << "\n65535\n";
    for (int iy = 0; iy < map.ny; ++iy)
        for (int ix = 0; ix < map.nx; ++ix) {
            // fftshift so the dc bin sits at the image centre; telescope maps
            // are already centred
            const int sx = map.frequency_order ? (ix + map.nx / 2) % map.nx : ix;
            const int sy = (map.ny == 1 || !map.frequency_order)
                               ? iy
                               : (iy + map.ny / 2) % map.ny;
            const double v = map.g[static_cast<std::size_t>(sy) * map.nx + sx];
            const auto p = static_cast<std::uint16_t>(
                std::lround((v - lo) / span * 65535.0));
            out.put(static_cast<char>(p >> 8));
            out.put(static_cast<char>(p & 0xff));
        }
    if (!out) throw ConfigError("pgm: write failed for " + path);
}

void save_map_csv(const CorrelationMap& map, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw ConfigError("csv: cannot write " + path);
    out.precision(17);
    out << (map.ny == 1 ? "x,g\n" : "x,y,g\n");
    for (int iy = 0; iy < map.ny; ++iy)
        for (int ix = 0; ix < map.nx; ++ix) {
            const int sx = map.frequency_order ? (ix + map.nx / 2) % map.nx : ix;
            const int sy = (map.ny == 1 || !map.frequency_order)
                               ? iy
                               : (iy + map.ny / 2) % map.ny;
            const double x = (ix - map.nx / 2) * map.dx;
            if (map.ny == 1)
                out << x << ',' << map.g[static_cast<std::size_t>(sx)] << '\n';
            else
                out << x << ',' << (iy - map.ny / 2) * map.dy << ','
                    << map.g[static_cast<std::size_t>(sy) * map.nx + sx] << '\n';
        }
}

}  // namespace ghostsim
