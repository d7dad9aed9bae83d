#pragma once

#include "mqed/hilbert.hpp"
#include "mqed/model.hpp"

namespace mqed {

// H = omega_c (adag a + 1/2) + |omega_s| (cos phi Sz + sin phi Sy)
//     + g (adag Sm + a Sp + a Sm + adag Sp).
// All four coupling terms kept; |omega_s| is the bare spin splitting.
Operator full_hamiltonian(const ModelParams& p, SpaceSpec space);

// Excitation-conserving part: omega_c (adag a + 1/2) + omega_s Sz
// + g (adag Sm + a Sp), with the signed omega_s. Commutes with adag a + Sz.
Operator jc_hamiltonian(const ModelParams& p, SpaceSpec space);

// Counter-rotating coupling: omega_c (adag a + 1/2) + omega_s Sz
// + g (a Sm + adag Sp). Commutes with adag a - Sz.
Operator anti_jc_hamiltonian(const ModelParams& p, SpaceSpec space);

// Second-order effective Hamiltonian for spin branch k (0: up, 1: down):
//   omega_c adag a + ((-1)^k / 2) omega_s
//   - ((-1)^k g^2 / (4 delta)) (adag adag + 2 adag a + a a + 1),
// built on the full space with the spin factor entering only through the
// scalar offset, so the one propagator engine serves it too.
// Throws SingularDetuningError when delta == 0; warns when g/delta > 0.3
// (outside the dispersive regime the expansion assumes).
Operator branch_hamiltonian(const ModelParams& p, int k, SpaceSpec space,
                            WarningList* warnings = nullptr);

// Block form sum_k H_k tensor |k><k|: each spin component rides its own
// branch Hamiltonian. Source of the collapse-revival dynamics.
Operator branch_diagonal_hamiltonian(const ModelParams& p, SpaceSpec space,
                                     WarningList* warnings = nullptr);

}  // namespace mqed
