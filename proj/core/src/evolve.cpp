#include "mqed/evolve.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "mqed/errors.hpp"

namespace mqed {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kTailTol = 1e-8;
constexpr double kUnitarityTol = 1e-10;

void check_grid(const std::vector<double>& t_grid) {
    if (t_grid.empty()) {
        throw InvalidArgumentError("time grid must not be empty");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw InvalidArgumentError("time grid must be strictly increasing");
        }
    }
}

// Appends a sample of every observable; tracks norm and truncation health.
struct Sampler {
    const ObservableSet& obs;
    TimeSeries& ts;
    bool tail_warned = false;

    Sampler(const ObservableSet& o, TimeSeries& t) : obs(o), ts(t) {
        for (const auto& name : obs.names) {
            ts.columns.push_back({name, {}});
        }
    }

    void operator()(const QuantumState& state, double t) {
        const double norm = state.amp.norm();
        if (std::abs(norm - 1.0) > kNormTol) {
            throw NumericalError("state norm drifted beyond 1e-9");
        }
        if (!tail_warned && boson_tail_population(state) > kTailTol) {
            warn(&ts.warnings, "population above 1e-8 in the top two Fock "
                               "levels: raise n_cut");
            tail_warned = true;
        }
        ts.times.push_back(t);
        for (std::size_t j = 0; j < obs.ops.size(); ++j) {
            ts.columns[j].values.push_back(expectation(state, obs.ops[j]).real());
        }
    }
};

}  // namespace

Propagator::Propagator(const Operator& h) : space_(h.space) {
    if (!is_hermitian(h.m)) {
        throw NumericalError("propagator generator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.m);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

QuantumState Propagator::apply(const QuantumState& state, double t) const {
    if (state.amp.size() != eigenvectors_.rows()) {
        throw DimensionMismatchError("state does not match propagator space");
    }
    Vector coeffs = eigenvectors_.adjoint() * state.amp;
    for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
        coeffs[j] *= std::polar(1.0, -eigenvalues_[j] * t);
    }
    return {state.space, eigenvectors_ * coeffs};
}

Operator Propagator::unitary(double t) const {
    const Eigen::Index dim = eigenvectors_.rows();
    Vector phases(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        phases[j] = std::polar(1.0, -eigenvalues_[j] * t);
    }
    Matrix u = eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
    const double defect =
        (u.adjoint() * u - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (defect > kUnitarityTol) {
        throw NumericalError("propagator failed the unitarity check");
    }
    return {space_, std::move(u)};
}

ObservableSet standard_observables(SpaceSpec space) {
    const Operators ops = build_operators(space);
    ObservableSet obs;
    obs.names = {"n", "sz", "x", "p_up"};
    obs.ops = {ops.n, ops.sz, ops.x, spin_up_projector(space)};
    return obs;
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2 || !(b > a)) {
        throw InvalidArgumentError("linspace needs n >= 2 and b > a");
    }
    std::vector<double> out(n);
    const double step = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) {
        out[i] = a + step * i;
    }
    out.back() = b;
    return out;
}

TimeSeries evolve(const QuantumState& initial, const Operator& h,
                  const std::vector<double>& t_grid, const ObservableSet& obs) {
    check_grid(t_grid);
    const Propagator prop(h);
    TimeSeries ts;
    Sampler sample(obs, ts);
    for (double t : t_grid) {
        sample(prop.apply(initial, t), t);
    }
    return ts;
}

TimeSeries evolve_piecewise(const QuantumState& initial,
                            const std::vector<Segment>& schedule,
                            int samples_per_segment, const ObservableSet& obs) {
    if (schedule.empty()) {
        throw InvalidArgumentError("schedule must not be empty");
    }
    if (samples_per_segment < 1) {
        throw InvalidArgumentError("samples_per_segment must be at least 1");
    }
    for (const Segment& seg : schedule) {
        if (seg.h == nullptr || !(seg.duration > 0.0)) {
            throw InvalidArgumentError("every segment needs a Hamiltonian and a "
                                       "positive duration");
        }
        if (seg.h->space.n_cut != initial.space.n_cut) {
            throw DimensionMismatchError("segment Hamiltonian space does not "
                                         "match the state");
        }
    }

    std::map<const Operator*, Propagator> props;
    for (const Segment& seg : schedule) {
        props.try_emplace(seg.h, *seg.h);
    }

    TimeSeries ts;
    Sampler sample(obs, ts);
    TimeSeries::LabelColumn tags{"segment", {}};

    auto emit = [&](const QuantumState& state, double t, const std::string& tag) {
        sample(state, t);
        tags.values.push_back(tag);
    };

    QuantumState state = initial;
    double t0 = 0.0;
    emit(state, 0.0, schedule.front().label);
    for (const Segment& seg : schedule) {
        const Propagator& prop = props.at(seg.h);
        for (int i = 1; i <= samples_per_segment; ++i) {
            const double tau = seg.duration * i / samples_per_segment;
            emit(prop.apply(state, tau), t0 + tau, seg.label);
        }
        state = prop.apply(state, seg.duration);
        t0 += seg.duration;
    }
    ts.labels.push_back(std::move(tags));
    return ts;
}

TimeSeries rwa_comparison(const ModelParams& p, const QuantumState& initial,
                          double t_max, int samples) {
    const SpaceSpec space = initial.space;
    const Propagator full(full_hamiltonian(p, space));
    const Propagator jc(jc_hamiltonian(p, space));
    const Matrix p_up = spin_up_projector(space);

    TimeSeries ts;
    ts.columns.push_back({"p_up_full", {}});
    ts.columns.push_back({"p_up_jc", {}});
    ts.times = linspace(0.0, t_max, samples);
    for (double t : ts.times) {
        ts.columns[0].values.push_back(
            expectation(full.apply(initial, t), p_up).real());
        ts.columns[1].values.push_back(
            expectation(jc.apply(initial, t), p_up).real());
    }
    return ts;
}

}  // namespace mqed
