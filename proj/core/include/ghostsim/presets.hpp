#ifndef GHOSTSIM_PRESETS_HPP
#define GHOSTSIM_PRESETS_HPP

#include <string>
#include <vector>

#include "ghostsim/config.hpp"

namespace ghostsim {

/// Named ready-to-run configurations covering the standard demonstrations.
std::vector<std::string> preset_names();
ExperimentConfig preset(const std::string& name);

}  // namespace ghostsim

#endif
