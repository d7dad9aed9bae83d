#include "mqed/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mqed {

namespace {

constexpr double kTailBound = 1e-10;

// Kronecker product with the spin factor fast: out[2i+k, 2j+l] = b(i,j) s(k,l).
Matrix kron(const Matrix& b, const Matrix& s) {
    const int nb = static_cast<int>(b.rows());
    const int ns = static_cast<int>(s.rows());
    Matrix out(nb * ns, nb * ns);
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) {
            out.block(i * ns, j * ns, ns, ns) = b(i, j) * s;
        }
    }
    return out;
}

void check_space(SpaceSpec space) {
    if (space.n_cut < 1) {
        throw InvalidArgumentError("n_cut must be at least 1");
    }
}

SpinAmplitudes normalized(SpinAmplitudes spin) {
    const double norm = std::sqrt(std::norm(spin.up) + std::norm(spin.down));
    if (!(norm > 0.0)) {
        throw InvalidArgumentError("spin amplitudes must not both vanish");
    }
    spin.up /= norm;
    spin.down /= norm;
    return spin;
}

// Probability the Poisson(|alpha|^2) distribution assigns beyond n_cut.
double coherent_tail(double alpha_sq, int n_cut) {
    double term = std::exp(-alpha_sq);
    double cum = term;
    for (int n = 1; n <= n_cut; ++n) {
        term *= alpha_sq / n;
        cum += term;
    }
    return 1.0 - cum;
}

struct BosonMoments {
    Complex a;       // <a>
    Complex aa;      // <a a>
    double n;        // <adag a>
    double a_adag;   // <a adag> with the truncated product (top row drops out)
};

BosonMoments boson_moments(const QuantumState& state) {
    const int nb = state.space.boson_dim();
    BosonMoments m{};
    for (int s = 0; s < 2; ++s) {
        for (int n = 0; n < nb; ++n) {
            const Complex amp = state.amp[2 * n + s];
            const double p = std::norm(amp);
            m.n += n * p;
            if (n + 1 < nb) m.a_adag += (n + 1) * p;
            if (n >= 1) m.a += std::conj(state.amp[2 * (n - 1) + s]) * std::sqrt(double(n)) * amp;
            if (n >= 2) {
                m.aa += std::conj(state.amp[2 * (n - 2) + s]) *
                        std::sqrt(double(n) * (n - 1)) * amp;
            }
        }
    }
    return m;
}

}  // namespace

Operators build_operators(SpaceSpec space) {
    check_space(space);
    const int nb = space.boson_dim();

    Matrix ab = Matrix::Zero(nb, nb);
    for (int n = 1; n < nb; ++n) {
        ab(n - 1, n) = std::sqrt(double(n));
    }
    Matrix ib = Matrix::Identity(nb, nb);

    Matrix i2 = Matrix::Identity(2, 2);
    Matrix spb = Matrix::Zero(2, 2);
    spb(0, 1) = 1.0;  // |down> -> |up>
    Matrix smb = spb.adjoint();
    Matrix szb = Matrix::Zero(2, 2);
    szb(0, 0) = 0.5;
    szb(1, 1) = -0.5;

    Operators ops;
    ops.space = space;
    ops.a = kron(ab, i2);
    ops.adag = kron(Matrix(ab.adjoint()), i2);
    ops.n = ops.adag * ops.a;
    ops.sp = kron(ib, spb);
    ops.sm = kron(ib, smb);
    ops.sz = kron(ib, szb);
    ops.sx = 0.5 * (ops.sp + ops.sm);
    ops.sy = Complex(0.0, -0.5) * (ops.sp - ops.sm);
    ops.x = ops.a + ops.adag;
    return ops;
}

Matrix spin_up_projector(SpaceSpec space) {
    check_space(space);
    const int nb = space.boson_dim();
    Matrix up = Matrix::Zero(2, 2);
    up(0, 0) = 1.0;
    return kron(Matrix::Identity(nb, nb), up);
}

int default_n_cut(Complex alpha) {
    const double a2 = std::norm(alpha);
    int n = std::max(4 * static_cast<int>(std::ceil(a2)) + 20, 40);
    while (coherent_tail(a2, n) >= kTailBound) {
        ++n;
    }
    return n;
}

QuantumState coherent_state(SpaceSpec space, Complex alpha, SpinAmplitudes spin) {
    check_space(space);
    const double a2 = std::norm(alpha);
    if (coherent_tail(a2, space.n_cut) >= kTailBound) {
        throw CutoffError("n_cut " + std::to_string(space.n_cut) +
                              " too small for |alpha| = " + std::to_string(std::abs(alpha)),
                          default_n_cut(alpha));
    }
    spin = normalized(spin);

    const int nb = space.boson_dim();
    Eigen::VectorXcd boson(nb);
    boson[0] = std::exp(-a2 / 2.0);
    for (int n = 1; n < nb; ++n) {
        boson[n] = boson[n - 1] * alpha / std::sqrt(double(n));
    }
    boson /= boson.norm();

    QuantumState state{space, Vector(space.dim())};
    for (int n = 0; n < nb; ++n) {
        state.amp[2 * n] = boson[n] * spin.up;
        state.amp[2 * n + 1] = boson[n] * spin.down;
    }
    return state;
}

QuantumState fock_state(SpaceSpec space, int n, SpinAmplitudes spin) {
    check_space(space);
    if (n < 0 || n > space.n_cut) {
        throw InvalidArgumentError("fock level outside [0, n_cut]");
    }
    spin = normalized(spin);
    QuantumState state{space, Vector::Zero(space.dim())};
    state.amp[2 * n] = spin.up;
    state.amp[2 * n + 1] = spin.down;
    return state;
}

Complex expectation(const QuantumState& state, const Matrix& op) {
    if (op.rows() != state.amp.size() || op.cols() != state.amp.size()) {
        throw DimensionMismatchError("operator does not match state dimension");
    }
    return (state.amp.adjoint() * (op * state.amp))(0, 0);
}

Complex expectation(const QuantumState& state, const Operator& op) {
    if (op.space.n_cut != state.space.n_cut) {
        throw DimensionMismatchError("operator space does not match state space");
    }
    return expectation(state, op.m);
}

double quadrature_variance(const QuantumState& state, double theta) {
    const BosonMoments m = boson_moments(state);
    const Complex c = m.aa - m.a * m.a;
    const double s = m.n + m.a_adag - 2.0 * std::norm(m.a);
    return 0.25 * (s + 2.0 * std::real(c * std::polar(1.0, -2.0 * theta)));
}

MinVariance min_quadrature_variance(const QuantumState& state) {
    const BosonMoments m = boson_moments(state);
    const Complex c = m.aa - m.a * m.a;
    const double s = m.n + m.a_adag - 2.0 * std::norm(m.a);
    MinVariance mv;
    mv.variance = 0.25 * (s - 2.0 * std::abs(c));
    double theta = 0.5 * (std::arg(c) + std::numbers::pi);
    theta = std::fmod(theta, std::numbers::pi);
    if (theta < 0.0) theta += std::numbers::pi;
    mv.theta = theta;
    return mv;
}

double boson_tail_population(const QuantumState& state) {
    const int nb = state.space.boson_dim();
    double pop = 0.0;
    for (int n = std::max(0, nb - 2); n < nb; ++n) {
        pop += std::norm(state.amp[2 * n]) + std::norm(state.amp[2 * n + 1]);
    }
    return pop;
}

bool is_hermitian(const Matrix& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - Matrix(m.adjoint())).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

}  // namespace mqed
