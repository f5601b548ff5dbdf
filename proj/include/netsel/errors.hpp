#pragma once

#include <stdexcept>
#include <string>

namespace netsel {

// Invalid system/scenario parameters detected at construction.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad runtime input (unknown user, malformed pattern, non-stochastic matrix, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed its guard cap.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace netsel
