#include "mqed/hamiltonian.hpp"

#include <cmath>

#include "mqed/errors.hpp"

namespace mqed {

namespace {

void check_branch(const ModelParams& p, int k, WarningList* warnings) {
    if (k != 0 && k != 1) {
        throw InvalidArgumentError("branch index must be 0 or 1");
    }
    if (p.delta == 0.0) {
        throw SingularDetuningError("delta is zero: branch expansion undefined");
    }
    if (p.g / p.delta > 0.3) {
        warn(warnings, "g/delta > 0.3: outside the dispersive regime the branch "
                       "expansion assumes");
    }
}

}  // namespace

Operator full_hamiltonian(const ModelParams& p, SpaceSpec space) {
    const Operators ops = build_operators(space);
    const int dim = space.dim();
    const double splitting = std::abs(p.omega_s);
    Matrix h = p.omega_c * (ops.n + 0.5 * Matrix::Identity(dim, dim)) +
               splitting * (std::cos(p.phi) * ops.sz + std::sin(p.phi) * ops.sy) +
               p.g * (ops.adag * ops.sm + ops.a * ops.sp + ops.a * ops.sm +
                      ops.adag * ops.sp);
    return {space, std::move(h)};
}

Operator jc_hamiltonian(const ModelParams& p, SpaceSpec space) {
    const Operators ops = build_operators(space);
    const int dim = space.dim();
    Matrix h = p.omega_c * (ops.n + 0.5 * Matrix::Identity(dim, dim)) +
               p.omega_s * ops.sz + p.g * (ops.adag * ops.sm + ops.a * ops.sp);
    return {space, std::move(h)};
}

Operator anti_jc_hamiltonian(const ModelParams& p, SpaceSpec space) {
    const Operators ops = build_operators(space);
    const int dim = space.dim();
    Matrix h = p.omega_c * (ops.n + 0.5 * Matrix::Identity(dim, dim)) +
               p.omega_s * ops.sz + p.g * (ops.a * ops.sm + ops.adag * ops.sp);
    return {space, std::move(h)};
}

Operator branch_hamiltonian(const ModelParams& p, int k, SpaceSpec space,
                            WarningList* warnings) {
    check_branch(p, k, warnings);
    const Operators ops = build_operators(space);
    const int dim = space.dim();
    const double sign = (k == 0) ? 1.0 : -1.0;
    const Matrix eye = Matrix::Identity(dim, dim);
    Matrix h = p.omega_c * ops.n + sign * 0.5 * p.omega_s * eye -
               sign * p.g * p.g / (4.0 * p.delta) *
                   (ops.adag * ops.adag + 2.0 * ops.n + ops.a * ops.a + eye);
    return {space, std::move(h)};
}

Operator branch_diagonal_hamiltonian(const ModelParams& p, SpaceSpec space,
                                     WarningList* warnings) {
    const Operator h0 = branch_hamiltonian(p, 0, space, warnings);
    const Operator h1 = branch_hamiltonian(p, 1, space, nullptr);
    const Matrix up = spin_up_projector(space);
    const Matrix down = Matrix::Identity(space.dim(), space.dim()) - up;
    return {space, Matrix(h0.m * up + h1.m * down)};
}

}  // namespace mqed
