#pragma once

#include <string>
#include <vector>

#include "mqed/hamiltonian.hpp"
#include "mqed/hilbert.hpp"
#include "mqed/timeseries.hpp"

namespace mqed {

// Spectral form of a Hermitian generator: exp(-i H t) evaluated exactly
// (to roundoff) at arbitrary t, with no step-to-step error accumulation.
class Propagator {
  public:
    // Throws NumericalError unless h is Hermitian to 1e-12 relative max-norm.
    explicit Propagator(const Operator& h);

    QuantumState apply(const QuantumState& state, double t) const;

    // Dense exp(-i H t); checked unitary to 1e-10 max-norm.
    Operator unitary(double t) const;

    const SpaceSpec& space() const { return space_; }

  private:
    SpaceSpec space_;
    Eigen::VectorXd eigenvalues_;
    Matrix eigenvectors_;
};

// Observables sampled into equally named TimeSeries columns.
struct ObservableSet {
    std::vector<std::string> names;
    std::vector<Matrix> ops;
};

// n, sz, x, p_up on the given space.
ObservableSet standard_observables(SpaceSpec space);

// n equally spaced points from a to b inclusive; n >= 2, b > a.
std::vector<double> linspace(double a, double b, int n);

// Sample the given observables along exp(-i H t)|initial> on t_grid
// (strictly increasing, nonempty). Norm drift beyond 1e-9 raises
// NumericalError; boson tail population above 1e-8 adds a warning.
TimeSeries evolve(const QuantumState& initial, const Operator& h,
                  const std::vector<double>& t_grid, const ObservableSet& obs);

struct Segment {
    const Operator* h = nullptr;
    double duration = 0.0;
    std::string label;
};

// Concatenated evolution under a piecewise-constant schedule. Each segment
// contributes samples_per_segment samples at its interior and right edge
// (t = 0 opens the series); a "segment" label column tags every sample.
TimeSeries evolve_piecewise(const QuantumState& initial,
                            const std::vector<Segment>& schedule,
                            int samples_per_segment, const ObservableSet& obs);

// Spin-up population under the full Hamiltonian vs its excitation-conserving
// part, from |up, 0>, sampled on [0, t_max]: columns p_up_full, p_up_jc.
TimeSeries rwa_comparison(const ModelParams& p, const QuantumState& initial,
                          double t_max, int samples = 2001);

}  // namespace mqed
