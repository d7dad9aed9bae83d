#include "mqed/squeezing.hpp"

#include <cmath>
#include <numbers>

#include "mqed/errors.hpp"

namespace mqed {

namespace {

using Cx = std::complex<double>;

void check_spin_weights(Cx c0, Cx c1) {
    if (std::abs(std::norm(c0) + std::norm(c1) - 1.0) > 1e-10) {
        throw InvalidArgumentError("spin amplitudes must satisfy |c0|^2 + |c1|^2 = 1");
    }
}

}  // namespace

SqueezeParams squeeze_params(const ModelParams& p, int k) {
    if (k != 0 && k != 1) {
        throw InvalidArgumentError("branch index must be 0 or 1");
    }
    if (p.delta == 0.0) {
        throw SingularDetuningError("delta is zero: squeezing parameters undefined");
    }
    const double sign = (k == 0) ? 1.0 : -1.0;
    const double wd = p.omega_c * p.delta;
    const double denom = wd - sign * p.g * p.g;
    if (k == 0 && denom <= 0.0) {
        throw InstabilityError("omega_c * delta <= g^2: branch 0 normal form "
                               "does not exist (inverted oscillator)");
    }
    SqueezeParams sp;
    sp.k = k;
    sp.n_factor = std::sqrt(wd / denom);
    sp.mu = 0.5 * (sp.n_factor + 1.0 / sp.n_factor);
    sp.nu = 0.5 * (sp.n_factor - 1.0 / sp.n_factor);
    sp.omega = p.omega_c * (1.0 - sign * p.g * p.g / (2.0 * wd));
    sp.energy_offset = sign * (0.5 * p.omega_s - p.g * p.g / (4.0 * p.delta));
    return sp;
}

double squeeze_factor(const SqueezeParams& sp, double t) {
    const double s = std::sin(sp.omega * t);
    const double mn = sp.mu * sp.nu;
    return std::log(2.0 * mn * s + std::sqrt(1.0 + 4.0 * mn * mn * s * s));
}

std::pair<Cx, Cx> bogoliubov_coeffs(const SqueezeParams& sp, double t) {
    const double s = std::sin(sp.omega * t);
    const double c = std::cos(sp.omega * t);
    return {Cx(c, (sp.mu * sp.mu + sp.nu * sp.nu) * s),
            Cx(0.0, 2.0 * sp.mu * sp.nu * s)};
}

double mean_position(const ModelParams& p, Cx alpha, Cx c0, Cx c1, double t) {
    check_spin_weights(c0, c1);
    const double weights[2] = {std::norm(c0), std::norm(c1)};
    double x = 0.0;
    for (int k = 0; k < 2; ++k) {
        if (weights[k] == 0.0) continue;
        const SqueezeParams sp = squeeze_params(p, k);
        x += weights[k] * (2.0 * alpha.real() * std::cos(sp.omega * t) / sp.n_factor +
                           2.0 * alpha.imag() * std::sin(sp.omega * t));
    }
    return x;
}

double mean_position_envelope(const ModelParams& p, Cx alpha, Cx c0, Cx c1,
                              double t) {
    check_spin_weights(c0, c1);
    const double weights[2] = {std::norm(c0), std::norm(c1)};
    Cx sum = 0.0;
    for (int k = 0; k < 2; ++k) {
        if (weights[k] == 0.0) continue;
        const SqueezeParams sp = squeeze_params(p, k);
        const Cx pq(2.0 * alpha.real() / sp.n_factor, -2.0 * alpha.imag());
        sum += weights[k] * pq * std::polar(1.0, sp.omega * t);
    }
    return std::abs(sum);
}

double revival_period(const ModelParams& p) {
    if (p.g <= 0.0) {
        throw InvalidArgumentError("g must be positive: branch frequencies "
                                   "coincide and the beat period diverges");
    }
    if (p.delta == 0.0) {
        throw SingularDetuningError("delta is zero: squeezing parameters undefined");
    }
    return 2.0 * std::numbers::pi * p.delta / (p.g * p.g);
}

}  // namespace mqed
