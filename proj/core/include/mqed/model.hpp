#pragma once

#include <optional>

#include "mqed/constants.hpp"
#include "mqed/warnings.hpp"

namespace mqed {

// Laboratory description of one spin coupled to one cantilever-style
// resonator through a magnetic tip. SI units as noted per field.
struct PhysicalSetup {
    double b0 = 0.0;    // static bias field, T (any sign)
    double b1 = 0.0;    // rotating drive amplitude, T (> 0)
    double phi = 0.0;   // drive phase, rad; 0 and pi select the signed spin-splitting convention
    double gamma = constants::gamma_electron;  // gyromagnetic ratio, rad/(s T) (> 0)
    double m_tip = 0.0;   // tip dipole moment, A m^2
    double d = 0.0;       // tip-to-spin distance, m (> 0)
    double m_eff = 0.0;   // effective resonator mass, kg (> 0)
    double omega_c = 0.0; // resonator angular frequency, rad/s (> 0)
    std::optional<double> k_eff;  // effective spring constant, N/m; defaults to m_eff*omega_c^2
};

// Throws InvalidSetupError naming the offending field. A present k_eff must
// agree with m_eff*omega_c^2 to 1e-6 relative.
void validate(const PhysicalSetup& setup);

// k_eff if given, else m_eff * omega_c^2.
double effective_spring_constant(const PhysicalSetup& setup);

// Tip dipole field at the spin site: offset a = mu0 m_tip / (2 pi d^3) in T,
// gradient = 3 mu0 m_tip / (2 pi d^4) in T/m (so gradient * d = 3 a), and the
// resonator zero-point length lambda = sqrt(hbar / (2 m_eff omega_c)) in m.
struct FieldParams {
    double a = 0.0;
    double gradient = 0.0;
    double lambda = 0.0;
};

FieldParams derive_field_params(const PhysicalSetup& setup);

// Drive frequency satisfying the resonance condition b0 + a + omega_r/gamma = 0;
// signed, rad/s.
double resonant_rf_frequency(const PhysicalSetup& setup, const FieldParams& fields);

// exact:  g = gamma * lambda * gradient / 2 = gamma * gradient * sqrt(hbar/(8 m_eff omega_c))
// paper:  g = 1e-7 * gradient * sqrt(omega_c / k_eff), the rounded engineering form
//         (the exact prefactor gamma*sqrt(hbar/8) is about 6.4e-7 for an electron spin).
enum class PrefactorMode { exact, paper };

double coupling_constant(const PhysicalSetup& setup, const FieldParams& fields,
                         PrefactorMode mode);

// Temperature below which the resonator mode is effectively frozen out:
// T = hbar * omega_c / k_B.
double quantum_regime_temperature(double omega_c);

// Dimensionless-model inputs shared by the Hamiltonian builders.
// omega_s is signed by phi: +gamma*b1 at phi=0, -gamma*b1 at phi=pi,
// unsigned gamma*b1 otherwise. delta = |omega_s - omega_c|.
struct ModelParams {
    double omega_c = 0.0;
    double omega_s = 0.0;
    double delta = 0.0;
    double g = 0.0;
    double phi = 0.0;
};

// Recomputes delta = |omega_s - omega_c|. Warns (never throws) when
// delta == 0, where the branch expansion is singular.
ModelParams make_params(double omega_c, double omega_s, double g, double phi = 0.0,
                        WarningList* warnings = nullptr);

// Assembles ModelParams from a validated setup, with g from coupling_constant.
ModelParams model_params(const PhysicalSetup& setup, const FieldParams& fields,
                         PrefactorMode mode, WarningList* warnings = nullptr);

// Dimensionless-study constructor: g = g_over_omega * omega_c,
// delta = g / g_over_delta, spin placed above the resonator
// (omega_s = omega_c + delta, phi = 0). Both ratios must be positive.
ModelParams params_from_ratios(double g_over_delta, double g_over_omega,
                               double omega_c = 1.0);

}  // namespace mqed
