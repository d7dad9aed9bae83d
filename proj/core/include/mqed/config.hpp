#pragma once

#include <istream>
#include <string>

#include "mqed/model.hpp"

namespace mqed {

// Flat UTF-8 `key = value` file; `#` starts a comment, blank lines ignored.
// Keys (SI units): b0 [T], b1 [T], phi [rad], gamma [rad/(s T)], m_tip [A m^2],
// d [m], m_eff [kg], omega_c [rad/s], and optional k_eff [N/m] (defaults to
// m_eff * omega_c^2). All others are required; unknown or duplicate keys are
// rejected. Throws ConfigError naming the key; the result passes validate().
PhysicalSetup load_config(const std::string& path);

// Same grammar from any stream; `origin` labels error messages.
PhysicalSetup parse_config(std::istream& in, const std::string& origin);

}  // namespace mqed
