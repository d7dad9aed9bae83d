#pragma once

#include <complex>

#include <Eigen/Dense>

#include "mqed/errors.hpp"

namespace mqed {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Truncated boson (Fock levels 0..n_cut) tensor spin-1/2 space.
// Basis index = 2*n + s with s = 0 for S_z = +1/2 and s = 1 for S_z = -1/2,
// so the spin index is the fast one. The ordering is part of the API: states
// serialized by index are portable across versions.
struct SpaceSpec {
    int n_cut = 1;

    int dim() const { return 2 * (n_cut + 1); }
    int boson_dim() const { return n_cut + 1; }
};

struct Operator {
    SpaceSpec space;
    Matrix m;
};

struct QuantumState {
    SpaceSpec space;
    Vector amp;
};

// Spin factor (up, down); state constructors normalize it.
struct SpinAmplitudes {
    Complex up{1.0, 0.0};
    Complex down{0.0, 0.0};
};

inline SpinAmplitudes spin_up() { return {{1.0, 0.0}, {0.0, 0.0}}; }
inline SpinAmplitudes spin_down() { return {{0.0, 0.0}, {1.0, 0.0}}; }

// Ladder, number, spin-1/2 and position operators on one space. Boson
// operators act as identity on the spin factor and vice versa.
// sp = sx + i sy raises the spin (sp|down> = |up>); x = a + adag.
struct Operators {
    SpaceSpec space;
    Matrix a, adag, n, sx, sy, sz, sp, sm, x;
};

// Throws InvalidArgumentError when n_cut < 1.
Operators build_operators(SpaceSpec space);

// Projector onto spin-up tensor the boson identity.
Matrix spin_up_projector(SpaceSpec space);

// Smallest cutoff keeping the coherent-state tail below 1e-10, floored at
// max(4*ceil(|alpha|^2) + 20, 40).
int default_n_cut(Complex alpha);

// |alpha> tensor spin, renormalized after truncation. Throws CutoffError
// carrying a sufficient n_cut when the discarded Poisson tail exceeds 1e-10.
QuantumState coherent_state(SpaceSpec space, Complex alpha,
                            SpinAmplitudes spin = spin_up());

// |n> tensor spin.
QuantumState fock_state(SpaceSpec space, int n, SpinAmplitudes spin = spin_up());

// <psi|O|psi>. Throws DimensionMismatchError when the matrix does not match
// the state dimension.
Complex expectation(const QuantumState& state, const Matrix& op);
Complex expectation(const QuantumState& state, const Operator& op);

// Var(X_theta) with X_theta = (a e^{-i theta} + adag e^{i theta}) / 2.
// Vacuum and coherent states give 1/4. Second moments are evaluated with the
// truncated operators, consistent with states evolved on the same space.
double quadrature_variance(const QuantumState& state, double theta);

struct MinVariance {
    double variance = 0.25;
    double theta = 0.0;  // minimizing angle, reduced to [0, pi)
};

// Closed form over the quadrature angle: with c = <a^2> - <a>^2 and
// s = <adag a> + <a adag> - 2|<a>|^2, the minimum is (s - 2|c|)/4 at
// theta = (arg c + pi)/2.
MinVariance min_quadrature_variance(const QuantumState& state);

// Population in the two highest Fock levels; the evolution layer warns when
// it exceeds 1e-8 (truncation pressure).
double boson_tail_population(const QuantumState& state);

// Max-norm Hermiticity test, relative to max(1, max|m_ij|).
bool is_hermitian(const Matrix& m, double rel_tol = 1e-12);

}  // namespace mqed
