#pragma once

#include <string>
#include <vector>

#include "mqed/evolve.hpp"
#include "mqed/model.hpp"

namespace mqed {

// Alternating drive-phase plan: n_cycles repetitions of a phi = 0 segment
// followed by a phi = pi segment, each lasting half_period seconds.
struct SwitchSchedule {
    double half_period = 0.0;
    int n_cycles = 1;
};

enum class DressedModel { jc, anti_jc };

// Coupling-induced resonator level shift: +2 g^2 <Sz>/delta for jc,
// -2 g^2 <Sz>/delta for anti_jc. Throws SingularDetuningError when
// delta == 0; warns when g/delta > 0.3.
double dressed_shift(const ModelParams& p, double spin_expect, DressedModel model,
                     WarningList* warnings = nullptr);

// delta_f / omega_c in the caller's (consistent) units.
double estimate_resolving_power(double delta_f, double omega_c);

struct Scenario {
    std::string name;
    double gradient = 0.0;   // T/m
    double k_eff = 0.0;      // N/m
    double omega_c = 0.0;    // rad/s
    double g = 0.0;          // rad/s, rounded-prefactor coupling
    double delta_f = 0.0;    // g^2/delta at g/delta = 0.1
    double t_quantum = 0.0;  // K
};

// Built-in detection scenarios, all at g/delta = 0.1 with the rounded
// coupling prefactor: a soft MRFM cantilever, a stiff GHz beam with the
// spring constant scaled as omega_c^2, and an antenna-coupled GHz beam.
std::vector<Scenario> scenario_table();

// Alternating phase-0 / phase-pi evolution of `initial` under the full
// Hamiltonian. params.phi must be 0 (the drive phase is toggled per
// segment); the spin splitting magnitude and delta come from params.
// Output columns: n, sz, x, p_up, and `shift`, the analytic dressed shift
// of the running segment evaluated at the spin expectation the segment
// started with (+ sign on phi = 0 segments, - on phi = pi). A `model`
// label column carries jc / anti_jc per sample.
TimeSeries simulate_switching(const ModelParams& params,
                              const SwitchSchedule& schedule,
                              const QuantumState& initial,
                              int samples_per_segment = 64);

}  // namespace mqed
