#pragma once

#include <complex>
#include <utility>

#include "mqed/model.hpp"

namespace mqed {

// Normal-form quantities of the quadratic branch Hamiltonians.
struct SqueezeParams {
    int k = 0;
    double n_factor = 1.0;      // N_k
    double mu = 1.0;            // mu_k
    double nu = 0.0;            // nu_k; mu^2 - nu^2 = 1
    double omega = 0.0;         // quasi-excitation frequency Omega_k, rad/s
    double energy_offset = 0.0; // E_k, rad/s; carried along, enters no
                                // observable computed here (branches are
                                // orthogonal, the offset is a global phase)
};

// N_k = sqrt(omega_c delta / (omega_c delta - (-1)^k g^2)),
// mu_k = (N_k + 1/N_k)/2, nu_k = (N_k - 1/N_k)/2,
// Omega_k = omega_c (1 - (-1)^k g^2 / (2 omega_c delta)),
// E_k = (-1)^k (omega_s/2 - g^2/(4 delta)).
// Throws SingularDetuningError when delta == 0 and InstabilityError when
// k == 0 with omega_c delta <= g^2 (inverted-oscillator regime).
SqueezeParams squeeze_params(const ModelParams& p, int k);

// r_k(t) = ln(2 mu nu sin(Omega t) + sqrt(1 + 4 mu^2 nu^2 sin^2(Omega t))).
// Signed: negative whenever mu nu sin(Omega t) < 0 (that quadrature is then
// anti-squeezed); |r| is the squeeze strength. Maximum over t is 2 ln N_k,
// reached at Omega t = pi/2; period 2 pi / Omega.
double squeeze_factor(const SqueezeParams& sp, double t);

// u1 = cos(Omega t) + i (mu^2 + nu^2) sin(Omega t), u2 = 2 i mu nu sin(Omega t)
// with |u1|^2 - |u2|^2 = 1: the coefficients propagating the quasi-excitation
// mode b(t) = u1 b + u2 bdag.
std::pair<std::complex<double>, std::complex<double>> bogoliubov_coeffs(
    const SqueezeParams& sp, double t);

// Mean resonator position for the spin superposition c0|up> + c1|down>
// tensor |alpha>:
//   <x>(t) = sum_k |c_k|^2 (2 Re(alpha) cos(Omega_k t)/N_k
//                           + 2 Im(alpha) sin(Omega_k t)).
// At t = 0 this gives 2 Re(alpha)/N_k rather than 2 Re(alpha): the formula
// treats |alpha> as an eigenstate of the transformed mode, and the 1/N_k
// offset is inherent to it, not corrected here.
// Throws InvalidArgumentError unless |c0|^2 + |c1|^2 = 1 within 1e-10.
double mean_position(const ModelParams& p, std::complex<double> alpha,
                     std::complex<double> c0, std::complex<double> c1, double t);

// Slow amplitude of the two-branch beat:
//   |sum_k |c_k|^2 (P_k - i Q_k) e^{i Omega_k t}|,
// P_k = 2 Re(alpha)/N_k, Q_k = 2 Im(alpha). Valid when the branch
// frequencies are close (|Omega_1 - Omega_0| << Omega_k).
double mean_position_envelope(const ModelParams& p, std::complex<double> alpha,
                              std::complex<double> c0, std::complex<double> c1,
                              double t);

// 2 pi / |Omega_1 - Omega_0| = 2 pi delta / g^2.
// Throws InvalidArgumentError when g == 0 (no beat, infinite period).
double revival_period(const ModelParams& p);

}  // namespace mqed
