#ifndef GHOSTSIM_GRID_IO_HPP
#define GHOSTSIM_GRID_IO_HPP

#include <string>

#include "ghostsim/correlator.hpp"

namespace ghostsim {

// GIMG: small self-describing binary raster for correlation maps.
//   "GIMG" | u32 version (1) | u32 frequency_order | u32 nx | u32 ny |
//   f64 dx | f64 dy | nx*ny f64 row-major (iy outer). Little-endian.
void save_gimg(const CorrelationMap& map, const std::string& path);
CorrelationMap load_gimg(const std::string& path);

/// 16-bit binary PGM preview, min..max stretched to 0..65535, with the
/// zero-frequency bin rolled to the centre so diffraction maps read like the
/// plotted figures. 1D maps are written as a 1-row image.
void save_pgm_preview(const CorrelationMap& map, const std::string& path);

/// "x,y,g" rows (or "x,g" for 1D), centred coordinates in metres.
void save_map_csv(const CorrelationMap& map, const std::string& path);

}  // namespace ghostsim

#endif
