#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mqed/errors.hpp"
#include "mqed/evolve.hpp"
#include "mqed/hamiltonian.hpp"
#include "mqed/hilbert.hpp"
#include "mqed/model.hpp"
#include "mqed/squeezing.hpp"

using namespace mqed;

TEST_CASE("propagator at t = 0 is the identity") {
    const SpaceSpec space{6};
    const ModelParams p = make_params(1.0, 1.3, 0.1);
    const Propagator prop(jc_hamiltonian(p, space));
    const Matrix u = prop.unitary(0.0).m;
    const Matrix id = Matrix::Identity(space.dim(), space.dim());
    CHECK((u - id).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("propagator applies exact phases to eigenstates") {
    const SpaceSpec space{6};
    const Operators ops = build_operators(space);
    const double w = 0.83;
    const Propagator prop(Operator{space, w * ops.n});
    const QuantumState one = fock_state(space, 1);
    const double t = 2.6;
    const QuantumState evolved = prop.apply(one, t);
    const Complex expected = std::polar(1.0, -w * t);
    CHECK(std::abs(evolved.amp(2) - expected) < 1e-13);
}

TEST_CASE("propagator composes over time") {
    const SpaceSpec space{10};
    const ModelParams p = make_params(1.0, 1.2, 0.3);
    const Propagator prop(full_hamiltonian(p, space));
    const Matrix u1 = prop.unitary(0.7).m;
    const Matrix u2 = prop.unitary(1.9).m;
    const Matrix u3 = prop.unitary(2.6).m;
    CHECK((u1 * u2 - u3).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("propagator rejects non-hermitian generators") {
    const SpaceSpec space{4};
    const Operators ops = build_operators(space);
    CHECK_THROWS_AS(Propagator(Operator{space, ops.a}), NumericalError);
}

TEST_CASE("resonant vacuum oscillation follows cos^2(g t)") {
    const SpaceSpec space{8};
    const double g = 0.02;
    WarningList sink;  // resonance means zero detuning, which warns
    const ModelParams p = make_params(1.0, 1.0, g, 0.0, &sink);
    const QuantumState initial = fock_state(space, 0, spin_up());
    const std::vector<double> grid = linspace(0.0, std::numbers::pi / g, 401);
    const TimeSeries ts =
        evolve(initial, jc_hamiltonian(p, space), grid, standard_observables(space));
    const std::vector<double>& p_up = *ts.column("p_up");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double c = std::cos(g * grid[i]);
        CHECK(std::abs(p_up[i] - c * c) < 1e-9);
    }
    CHECK(p_up.back() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("an eigenstate keeps all observables constant") {
    const SpaceSpec space{8};
    const ModelParams p = make_params(1.0, 1.3, 0.05);
    const QuantumState down = fock_state(space, 0, spin_down());
    const TimeSeries ts = evolve(down, jc_hamiltonian(p, space), linspace(0.0, 50.0, 101),
                                 standard_observables(space));
    for (const auto& col : ts.columns) {
        for (double v : col.values) {
            CHECK(std::abs(v - col.values.front()) < 1e-9);
        }
    }
}

TEST_CASE("free oscillator rotates a coherent state rigidly") {
    const SpaceSpec space{40};
    const Operators ops = build_operators(space);
    const double w = 1.0;
    const Complex alpha = std::polar(0.8, std::numbers::pi / 5.0);
    const QuantumState initial = coherent_state(space, alpha);
    ObservableSet obs;
    obs.names = {"x"};
    obs.ops = {ops.x};
    const std::vector<double> grid = linspace(0.0, 12.0, 121);
    const TimeSeries ts = evolve(initial, Operator{space, w * ops.n}, grid, obs);
    const std::vector<double>& x = *ts.column("x");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double expected = 2.0 * 0.8 * std::cos(w * grid[i] - std::arg(alpha));
        CHECK(std::abs(x[i] - expected) < 1e-8);
    }
}

TEST_CASE("energy and excitation invariants stay flat") {
    const SpaceSpec space{20};
    const Operators ops = build_operators(space);
    const ModelParams p = make_params(1.0, 1.4, 0.2);
    const QuantumState initial = coherent_state(space, Complex(1.0, 0.5), spin_down());

    SUBCASE("full hamiltonian conserves energy") {
        const Operator h = full_hamiltonian(p, space);
        ObservableSet obs;
        obs.names = {"energy"};
        obs.ops = {h.m};
        const TimeSeries ts = evolve(initial, h, linspace(0.0, 30.0, 301), obs);
        const std::vector<double>& e = *ts.column("energy");
        for (double v : e) {
            CHECK(std::abs(v - e.front()) < 1e-9 * std::abs(e.front()));
        }
    }
    SUBCASE("rotating part conserves n + sz") {
        ObservableSet obs;
        obs.names = {"inv"};
        obs.ops = {ops.n + ops.sz};
        const TimeSeries ts =
            evolve(initial, jc_hamiltonian(p, space), linspace(0.0, 30.0, 301), obs);
        for (double v : *ts.column("inv")) {
            CHECK(std::abs(v - ts.column("inv")->front()) < 1e-9);
        }
    }
    SUBCASE("counter-rotating part conserves n - sz") {
        ObservableSet obs;
        obs.names = {"inv"};
        obs.ops = {ops.n - ops.sz};
        const TimeSeries ts =
            evolve(initial, anti_jc_hamiltonian(p, space), linspace(0.0, 30.0, 301), obs);
        for (double v : *ts.column("inv")) {
            CHECK(std::abs(v - ts.column("inv")->front()) < 1e-9);
        }
    }
}

TEST_CASE("evolution flags a populated truncation edge") {
    const SpaceSpec space{5};
    const Operators ops = build_operators(space);
    const QuantumState top = fock_state(space, 5);
    const TimeSeries ts = evolve(top, Operator{space, ops.n}, linspace(0.0, 1.0, 3),
                                 standard_observables(space));
    CHECK_FALSE(ts.warnings.empty());
}

TEST_CASE("evolve input validation") {
    const SpaceSpec space{4};
    const Operators ops = build_operators(space);
    const Operator h{space, ops.n};
    const QuantumState psi = fock_state(space, 0);
    const ObservableSet obs = standard_observables(space);

    CHECK_THROWS_AS((void)evolve(psi, h, {}, obs), InvalidArgumentError);
    CHECK_THROWS_AS((void)evolve(psi, h, {0.0, 1.0, 1.0}, obs), InvalidArgumentError);
    CHECK_THROWS_AS((void)evolve(psi, h, {0.0, 1.0}, standard_observables(SpaceSpec{7})),
                    DimensionMismatchError);
    const QuantumState big = fock_state(SpaceSpec{9}, 0);
    CHECK_THROWS_AS((void)evolve(big, h, {0.0, 1.0}, obs), DimensionMismatchError);
}

TEST_CASE("linspace endpoints and validation") {
    const std::vector<double> g = linspace(-1.0, 3.0, 5);
    CHECK(g.size() == 5);
    CHECK(g.front() == -1.0);
    CHECK(g.back() == 3.0);
    CHECK(g[2] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)linspace(0.0, 1.0, 1), InvalidArgumentError);
    CHECK_THROWS_AS((void)linspace(1.0, 1.0, 5), InvalidArgumentError);
    CHECK_THROWS_AS((void)linspace(2.0, 1.0, 5), InvalidArgumentError);
}

TEST_CASE("piecewise evolution with one segment reproduces plain evolution") {
    const SpaceSpec space{12};
    const ModelParams p = make_params(1.0, 1.5, 0.2);
    const Operator h = full_hamiltonian(p, space);
    const QuantumState initial = coherent_state(space, Complex(0.6, 0.0), spin_down());
    const ObservableSet obs = standard_observables(space);

    const int ns = 50;
    const double tau = 8.0;
    const TimeSeries direct = evolve(initial, h, linspace(0.0, tau, ns + 1), obs);
    const TimeSeries pieced = evolve_piecewise(initial, {{&h, tau, "only"}}, ns, obs);

    REQUIRE(direct.times.size() == pieced.times.size());
    for (std::size_t i = 0; i < direct.times.size(); ++i) {
        CHECK(std::abs(direct.times[i] - pieced.times[i]) < 1e-12);
    }
    for (std::size_t c = 0; c < direct.columns.size(); ++c) {
        for (std::size_t i = 0; i < direct.times.size(); ++i) {
            CHECK(std::abs(direct.columns[c].values[i] - pieced.columns[c].values[i]) < 1e-12);
        }
    }
}

TEST_CASE("piecewise segments compose and carry labels") {
    const SpaceSpec space{12};
    const ModelParams p = make_params(1.0, 1.5, 0.2);
    const Operator h = full_hamiltonian(p, space);
    const QuantumState initial = coherent_state(space, Complex(0.6, 0.0), spin_down());
    const ObservableSet obs = standard_observables(space);

    const int ns = 25;
    const double tau = 4.0;
    const TimeSeries split =
        evolve_piecewise(initial, {{&h, tau, "a"}, {&h, tau, "b"}}, ns, obs);
    const TimeSeries whole = evolve(initial, h, linspace(0.0, 2.0 * tau, 2 * ns + 1), obs);

    REQUIRE(split.times.size() == whole.times.size());
    for (std::size_t c = 0; c < whole.columns.size(); ++c) {
        CHECK(std::abs(split.columns[c].values.back() - whole.columns[c].values.back()) < 1e-9);
    }

    REQUIRE(split.labels.size() == 1);
    CHECK(split.labels[0].name == "segment");
    const auto& tags = split.labels[0].values;
    CHECK(tags.front() == "a");
    CHECK(tags[ns] == "a");       // right edge of the first segment
    CHECK(tags[ns + 1] == "b");   // first interior sample of the second
    CHECK(tags.back() == "b");
}

TEST_CASE("piecewise evolution input validation") {
    const SpaceSpec space{4};
    const Operators ops = build_operators(space);
    const Operator h{space, ops.n};
    const QuantumState psi = fock_state(space, 0);
    const ObservableSet obs = standard_observables(space);

    CHECK_THROWS_AS((void)evolve_piecewise(psi, {}, 4, obs), InvalidArgumentError);
    CHECK_THROWS_AS((void)evolve_piecewise(psi, {{&h, 0.0, ""}}, 4, obs), InvalidArgumentError);
    CHECK_THROWS_AS((void)evolve_piecewise(psi, {{&h, 1.0, ""}}, 0, obs), InvalidArgumentError);
    const Operator small{SpaceSpec{2}, build_operators(SpaceSpec{2}).n};
    CHECK_THROWS_AS((void)evolve_piecewise(psi, {{&small, 1.0, ""}}, 4, obs),
                    DimensionMismatchError);
}

TEST_CASE("rotating-wave comparison tracks the coupling strength") {
    SUBCASE("weak coupling stays within two percent") {
        WarningList sink;
        const ModelParams p = make_params(1.0, 1.0, 0.01, 0.0, &sink);
        const QuantumState initial = fock_state(SpaceSpec{24}, 0, spin_up());
        const TimeSeries ts = rwa_comparison(p, initial, std::numbers::pi / p.g, 501);
        const std::vector<double>& full = *ts.column("p_up_full");
        const std::vector<double>& jc = *ts.column("p_up_jc");
        double worst = 0.0;
        for (std::size_t i = 0; i < full.size(); ++i) {
            worst = std::max(worst, std::abs(full[i] - jc[i]));
        }
        CHECK(worst < 0.02);
    }
    SUBCASE("strong coupling breaks the approximation") {
        WarningList sink;
        const ModelParams p = make_params(1.0, 1.0, 0.5, 0.0, &sink);
        const QuantumState initial = fock_state(SpaceSpec{24}, 0, spin_up());
        const TimeSeries ts = rwa_comparison(p, initial, std::numbers::pi / p.g, 501);
        const std::vector<double>& full = *ts.column("p_up_full");
        const std::vector<double>& jc = *ts.column("p_up_jc");
        double worst = 0.0;
        for (std::size_t i = 0; i < full.size(); ++i) {
            worst = std::max(worst, std::abs(full[i] - jc[i]));
        }
        CHECK(worst > 0.02);
    }
}

TEST_CASE("branch evolution reproduces the analytic squeeze factor") {
    const ModelParams p = params_from_ratios(0.1, 0.5);
    const SqueezeParams sp = squeeze_params(p, 0);
    const SpaceSpec space{60};
    const Propagator prop(branch_hamiltonian(p, 0, space));
    const QuantumState initial = coherent_state(space, Complex(1.0, 0.0));

    const double t_end = std::numbers::pi / sp.omega;
    double worst = 0.0;
    for (int i = 0; i <= 25; ++i) {
        const double t = t_end * i / 25.0;
        const double v_ana = 0.25 * std::exp(-2.0 * squeeze_factor(sp, t));
        const QuantumState psi = prop.apply(initial, t);
        const double v_num = min_quadrature_variance(psi).variance;
        worst = std::max(worst, std::abs(v_num - v_ana) / v_ana);
    }
    CHECK(worst < 0.10);
}
