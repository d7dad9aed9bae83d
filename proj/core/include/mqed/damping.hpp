#pragma once

#include <vector>

#include "mqed/timeseries.hpp"

namespace mqed {

struct DampingParams {
    double kappa = 0.0;   // resonator energy damping rate, rad/s (>= 0)
    double g = 0.0;       // spin-resonator coupling, rad/s (>= 0)
    double n_th = 0.0;    // bath mean occupation at the resonator frequency
    double q_factor = 0.0;  // stored for interface stability; the closed
                            // moment system below does not involve it
};

// First-moment vector (<adag a>, <Sz>, X = i<Sp a + Sm adag>, <adag Sz a>).
struct LangevinState {
    double n = 0.0;
    double sz = 0.0;
    double x = 0.0;
    double nsz = 0.0;
};

// Closed moment system:
//   dn/dt   = -kappa n + g x + kappa n_th
//   dsz/dt  = -2 g x
//   dx/dt   = g sz - (kappa/2) x + 2 g nsz + g
//   dnsz/dt = -g x - kappa nsz
LangevinState langevin_rhs(const LangevinState& s, const DampingParams& p);

// Adaptive Dormand-Prince integration with dense output on t_grid (strictly
// increasing; the initial state sits at t_grid.front()). tol must lie in
// [1e-12, 1e-4]. Columns: n, sz, x, nsz. A warning is recorded when sz
// leaves [-1/2, 1/2]: the moment system does not preserve the physical spin
// band and its trajectory is reported as is, never clamped.
// Throws StiffnessError if the controller cannot meet the tolerance.
TimeSeries integrate(const LangevinState& initial, const DampingParams& p,
                     const std::vector<double>& t_grid, double tol = 1e-10);

// The unique rest point (n_th, -1, 0, 0) of the system above. Throws
// InvalidArgumentError when kappa == 0 or g == 0 (a line of rest points
// then exists instead). Note sz = -1 lies outside the spin-1/2 band; the
// system is reported as written.
LangevinState steady_state(const DampingParams& p);

}  // namespace mqed
