#include "mqed/damping.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "mqed/errors.hpp"

namespace mqed {

namespace {

using StateVec = std::array<double, 4>;

void check_params(const DampingParams& p) {
    if (p.kappa < 0.0 || p.g < 0.0 || p.n_th < 0.0) {
        throw InvalidSetupError("kappa, g and n_th must be non-negative");
    }
}

}  // namespace

LangevinState langevin_rhs(const LangevinState& s, const DampingParams& p) {
    return {
        -p.kappa * s.n + p.g * s.x + p.kappa * p.n_th,
        -2.0 * p.g * s.x,
        p.g * s.sz - 0.5 * p.kappa * s.x + 2.0 * p.g * s.nsz + p.g,
        -p.g * s.x - p.kappa * s.nsz,
    };
}

TimeSeries integrate(const LangevinState& initial, const DampingParams& p,
                     const std::vector<double>& t_grid, double tol) {
    check_params(p);
    if (!(tol >= 1e-12 && tol <= 1e-4)) {
        throw InvalidArgumentError("tol must lie in [1e-12, 1e-4]");
    }
    if (t_grid.size() < 2) {
        throw InvalidArgumentError("time grid needs at least two points");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw InvalidArgumentError("time grid must be strictly increasing");
        }
    }

    auto system = [&p](const StateVec& y, StateVec& dydt, double) {
        const LangevinState d = langevin_rhs({y[0], y[1], y[2], y[3]}, p);
        dydt = {d.n, d.sz, d.x, d.nsz};
    };

    TimeSeries ts;
    ts.columns = {{"n", {}}, {"sz", {}}, {"x", {}}, {"nsz", {}}};
    bool band_warned = false;
    auto observer = [&](const StateVec& y, double t) {
        ts.times.push_back(t);
        ts.columns[0].values.push_back(y[0]);
        ts.columns[1].values.push_back(y[1]);
        ts.columns[2].values.push_back(y[2]);
        ts.columns[3].values.push_back(y[3]);
        if (!band_warned && (y[1] < -0.5 || y[1] > 0.5)) {
            warn(&ts.warnings, "sz left the physical band [-1/2, 1/2]; the "
                               "moment system is reported unclamped");
            band_warned = true;
        }
    };

    namespace ode = boost::numeric::odeint;
    StateVec y{initial.n, initial.sz, initial.x, initial.nsz};
    const double dt0 = (t_grid.back() - t_grid.front()) / 1000.0;
    try {
        auto stepper = ode::make_dense_output(
            tol, tol, ode::runge_kutta_dopri5<StateVec>());
        ode::integrate_times(stepper, system, y, t_grid.begin(), t_grid.end(),
                             dt0, observer);
    } catch (const std::overflow_error& e) {
        throw StiffnessError(std::string("step-size underflow: ") + e.what());
    }
    return ts;
}

LangevinState steady_state(const DampingParams& p) {
    check_params(p);
    if (p.kappa == 0.0 || p.g == 0.0) {
        throw InvalidArgumentError("fixed point is unique only for kappa > 0 "
                                   "and g > 0");
    }
    return {p.n_th, -1.0, 0.0, 0.0};
}

}  // namespace mqed
