#pragma once

// CODATA 2018 values, 10 significant digits. All frequencies in this
// library are angular (rad/s); "quoted as Hz" outputs are rad/s values
// reported under the source convention, with /2pi companions where emitted.
namespace mqed::constants {

inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double k_boltzmann = 1.380649e-23;    // J / K
inline constexpr double mu0 = 1.256637062e-6;          // N / A^2
inline constexpr double gamma_electron = 1.760859630e11;  // rad / (s T)

}  // namespace mqed::constants
