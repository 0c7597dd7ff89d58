#ifndef GHOSTSIM_ERRORS_HPP
#define GHOSTSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghostsim {

/// A precondition of an internal API was violated (programming error).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

/// Bad user-facing input: config files, presets, masks, file formats.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical routine could not produce a meaningful result.
class FitError : public std::runtime_error {
public:
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ghostsim

#endif
