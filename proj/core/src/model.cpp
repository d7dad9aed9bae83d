#include "mqed/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mqed/errors.hpp"

namespace mqed {

namespace {

void require_positive(double value, const char* field) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvalidSetupError(std::string(field) + " must be positive and finite");
    }
}

void require_finite(double value, const char* field) {
    if (!std::isfinite(value)) {
        throw InvalidSetupError(std::string(field) + " must be finite");
    }
}

}  // namespace

void validate(const PhysicalSetup& s) {
    require_finite(s.b0, "b0");
    require_positive(s.b1, "b1");
    require_finite(s.phi, "phi");
    require_positive(s.gamma, "gamma");
    require_finite(s.m_tip, "m_tip");
    require_positive(s.d, "d");
    require_positive(s.m_eff, "m_eff");
    require_positive(s.omega_c, "omega_c");
    if (s.k_eff) {
        require_positive(*s.k_eff, "k_eff");
        const double implied = s.m_eff * s.omega_c * s.omega_c;
        if (std::abs(*s.k_eff - implied) > 1e-6 * implied) {
            throw InvalidSetupError("k_eff inconsistent with m_eff * omega_c^2");
        }
    }
}

double effective_spring_constant(const PhysicalSetup& s) {
    return s.k_eff ? *s.k_eff : s.m_eff * s.omega_c * s.omega_c;
}

FieldParams derive_field_params(const PhysicalSetup& s) {
    require_positive(s.d, "d");
    require_positive(s.m_eff, "m_eff");
    require_positive(s.omega_c, "omega_c");
    const double two_pi = 2.0 * std::numbers::pi;
    FieldParams f;
    f.a = constants::mu0 * s.m_tip / (two_pi * s.d * s.d * s.d);
    f.gradient = 3.0 * constants::mu0 * s.m_tip / (two_pi * s.d * s.d * s.d * s.d);
    f.lambda = std::sqrt(constants::hbar / (2.0 * s.m_eff * s.omega_c));
    return f;
}

double resonant_rf_frequency(const PhysicalSetup& s, const FieldParams& f) {
    return -s.gamma * (s.b0 + f.a);
}

double coupling_constant(const PhysicalSetup& s, const FieldParams& f,
                         PrefactorMode mode) {
    if (mode == PrefactorMode::paper) {
        return 1e-7 * f.gradient * std::sqrt(s.omega_c / effective_spring_constant(s));
    }
    return s.gamma * f.lambda * f.gradient / 2.0;
}

double quantum_regime_temperature(double omega_c) {
    if (!(omega_c > 0.0)) {
        throw InvalidArgumentError("omega_c must be positive");
    }
    return constants::hbar * omega_c / constants::k_boltzmann;
}

ModelParams make_params(double omega_c, double omega_s, double g, double phi,
                        WarningList* warnings) {
    if (!(omega_c > 0.0)) {
        throw InvalidArgumentError("omega_c must be positive");
    }
    if (g < 0.0) {
        throw InvalidArgumentError("g must be non-negative");
    }
    ModelParams p;
    p.omega_c = omega_c;
    p.omega_s = omega_s;
    p.delta = std::abs(omega_s - omega_c);
    p.g = g;
    p.phi = phi;
    if (p.delta == 0.0) {
        warn(warnings, "delta is zero: branch and squeezing expressions are singular");
    }
    return p;
}

ModelParams model_params(const PhysicalSetup& s, const FieldParams& f,
                         PrefactorMode mode, WarningList* warnings) {
    validate(s);
    const double splitting = s.gamma * s.b1;
    double omega_s = splitting;
    if (s.phi == std::numbers::pi) {
        omega_s = -splitting;
    }
    return make_params(s.omega_c, omega_s, coupling_constant(s, f, mode), s.phi,
                       warnings);
}

ModelParams params_from_ratios(double g_over_delta, double g_over_omega,
                               double omega_c) {
    if (!(g_over_delta > 0.0) || !(g_over_omega > 0.0)) {
        throw InvalidArgumentError("coupling ratios must be positive");
    }
    const double g = g_over_omega * omega_c;
    const double delta = g / g_over_delta;
    return make_params(omega_c, omega_c + delta, g, 0.0);
}

}  // namespace mqed
