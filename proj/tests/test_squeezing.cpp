#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "mqed/errors.hpp"
#include "mqed/hilbert.hpp"
#include "mqed/model.hpp"
#include "mqed/squeezing.hpp"

using namespace mqed;

namespace {

// omega_c = 1, omega_s = 11: delta = 10, g = 1. The worked reference point.
ModelParams reference_params() { return make_params(1.0, 11.0, 1.0); }

}  // namespace

TEST_CASE("branch squeeze parameters at the reference point") {
    const ModelParams p = reference_params();

    const SqueezeParams s0 = squeeze_params(p, 0);
    CHECK(s0.n_factor == doctest::Approx(1.0540925533894598).epsilon(1e-14));
    CHECK(s0.mu == doctest::Approx(1.0013879257199867).epsilon(1e-14));
    CHECK(s0.nu == doctest::Approx(0.052704627669473036).epsilon(1e-14));
    CHECK(s0.omega == doctest::Approx(0.95).epsilon(1e-14));
    CHECK(s0.energy_offset == doctest::Approx(5.475).epsilon(1e-14));

    const SqueezeParams s1 = squeeze_params(p, 1);
    CHECK(s1.n_factor == doctest::Approx(0.95346258924559235).epsilon(1e-14));
    CHECK(s1.mu == doctest::Approx(1.001135718707872).epsilon(1e-14));
    CHECK(s1.nu == doctest::Approx(-0.047673129462279529).epsilon(1e-14));
    CHECK(s1.omega == doctest::Approx(1.05).epsilon(1e-14));
    CHECK(s1.energy_offset == doctest::Approx(-5.475).epsilon(1e-14));

    CHECK(s1.omega - s0.omega == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("zero coupling leaves the oscillator untouched") {
    const ModelParams p = make_params(1.0, 11.0, 0.0);
    for (int k : {0, 1}) {
        const SqueezeParams s = squeeze_params(p, k);
        CHECK(s.n_factor == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(s.mu == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(s.nu) < 1e-15);
        CHECK(s.omega == doctest::Approx(1.0).epsilon(1e-15));
        for (double t : {0.0, 0.7, 3.1, 12.0}) {
            CHECK(std::abs(squeeze_factor(s, t)) < 1e-15);
        }
    }
}

TEST_CASE("hyperbolic identity holds across a parameter sweep") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> gd(0.01, 0.3);
    std::uniform_real_distribution<double> gw(0.05, 0.9);
    std::uniform_real_distribution<double> wc(0.5, 2.0);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = params_from_ratios(gd(rng), gw(rng), wc(rng));
        for (int k : {0, 1}) {
            const SqueezeParams s = squeeze_params(p, k);
            CHECK(std::abs(s.mu * s.mu - s.nu * s.nu - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("squeeze factor: zero at start, extremal at quarter period, periodic") {
    const ModelParams p = reference_params();
    for (int k : {0, 1}) {
        const SqueezeParams s = squeeze_params(p, k);
        CHECK(squeeze_factor(s, 0.0) == 0.0);

        const double quarter = 0.5 * std::numbers::pi / s.omega;
        const double peak = 2.0 * std::log(s.n_factor);
        CHECK(squeeze_factor(s, quarter) == doctest::Approx(peak).epsilon(1e-12));
        // Three quarters in, the same magnitude appears with opposite sign.
        CHECK(squeeze_factor(s, 3.0 * quarter) == doctest::Approx(-peak).epsilon(1e-12));

        const double period = 2.0 * std::numbers::pi / s.omega;
        double max_r = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double t = period * i / 400.0;
            const double r = squeeze_factor(s, t);
            max_r = std::max(max_r, std::abs(r));
            CHECK(std::abs(squeeze_factor(s, t + period) - r) < 1e-9);
        }
        CHECK(max_r <= std::abs(peak) + 1e-12);
    }
}

TEST_CASE("bogoliubov coefficients") {
    const ModelParams p = reference_params();
    const SqueezeParams s = squeeze_params(p, 0);

    const auto [u1_0, u2_0] = bogoliubov_coeffs(s, 0.0);
    CHECK(std::abs(u1_0 - Complex(1.0)) < 1e-15);
    CHECK(std::abs(u2_0) < 1e-15);

    const double quarter = 0.5 * std::numbers::pi / s.omega;
    const auto [u1, u2] = bogoliubov_coeffs(s, quarter);
    CHECK(std::abs(u1 - Complex(0.0, s.mu * s.mu + s.nu * s.nu)) < 1e-14);
    CHECK(std::abs(u2 - Complex(0.0, 0.10555555555555564)) < 1e-14);

    std::mt19937 rng(777);
    std::uniform_real_distribution<double> time(0.0, 25.0);
    for (int i = 0; i < 50; ++i) {
        const auto [a, b] = bogoliubov_coeffs(s, time(rng));
        CHECK(std::abs(std::norm(a) - std::norm(b) - 1.0) < 1e-12);
    }
}

TEST_CASE("branch instability outside the trapping window") {
    // omega_c * delta <= g^2 makes the upper branch inverted.
    const ModelParams p = make_params(1.0, 1.5, 1.0);
    CHECK_THROWS_AS((void)squeeze_params(p, 0), InstabilityError);
    CHECK_NOTHROW((void)squeeze_params(p, 1));
}

TEST_CASE("squeeze params guards") {
    const ModelParams degenerate = make_params(1.0, 1.0, 0.1);
    CHECK_THROWS_AS((void)squeeze_params(degenerate, 0), SingularDetuningError);
    CHECK_THROWS_AS((void)squeeze_params(reference_params(), 3), InvalidArgumentError);
}

TEST_CASE("mean position of a spin superposition with a coherent oscillator") {
    const ModelParams p = reference_params();
    const Complex alpha(1.0, 0.0);
    const double c = std::numbers::sqrt2 / 2.0;

    // At t = 0 each branch contributes 2 Re(alpha) / N_k.
    CHECK(mean_position(p, alpha, c, c, 0.0) ==
          doctest::Approx(1.9974921462206656).epsilon(1e-12));

    // A pure spin-up superposition oscillates at the single branch frequency.
    const SqueezeParams s0 = squeeze_params(p, 0);
    for (double t : {0.1, 0.5, 2.0, 7.3}) {
        const double expected = 2.0 / s0.n_factor * std::cos(s0.omega * t);
        CHECK(mean_position(p, alpha, 1.0, 0.0, t) ==
              doctest::Approx(expected).epsilon(1e-12));
    }

    // An imaginary displacement drives the sine component at full weight.
    const Complex beta(0.0, 0.8);
    const double expected = 2.0 * 0.8 * std::sin(s0.omega * 1.3);
    CHECK(mean_position(p, beta, 1.0, 0.0, 1.3) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("mean position rejects unnormalized spin weights") {
    const ModelParams p = reference_params();
    CHECK_THROWS_AS((void)mean_position(p, Complex(1.0, 0.0), 1.0, 1.0, 0.0),
                    InvalidArgumentError);
    CHECK_THROWS_AS((void)mean_position_envelope(p, Complex(1.0, 0.0), 0.3, 0.4, 0.0),
                    InvalidArgumentError);
}

TEST_CASE("beat envelope collapses midway and revives at the beat period") {
    const ModelParams p = reference_params();
    const Complex alpha(1.0, 0.0);
    const double c = std::numbers::sqrt2 / 2.0;
    const double t_rev = revival_period(p);
    CHECK(t_rev == doctest::Approx(62.831853071795862).epsilon(1e-14));

    const int samples = 10001;
    double t_min = 0.0, env_min = 1e300;
    double t_max = 0.0, env_max = -1.0;
    for (int i = 0; i < samples; ++i) {
        const double t = 70.0 * i / (samples - 1);
        const double env = mean_position_envelope(p, alpha, c, c, t);
        const double x = mean_position(p, alpha, c, c, t);
        CHECK(std::abs(x) <= env + 1e-9);
        if (t > 10.0 && t < 55.0 && env < env_min) {
            env_min = env;
            t_min = t;
        }
        if (t > 40.0 && env > env_max) {
            env_max = env;
            t_max = t;
        }
    }
    CHECK(std::abs(t_min - 0.5 * t_rev) < 0.02 * t_rev);
    CHECK(std::abs(t_max - t_rev) < 0.02 * t_rev);
    CHECK(env_max > 0.9 * mean_position_envelope(p, alpha, c, c, 0.0));
}

TEST_CASE("revival period scales inversely with coupling squared") {
    const ModelParams slow = make_params(1.0, 11.0, 1.0);
    const ModelParams fast = make_params(1.0, 11.0, 2.0);
    CHECK(revival_period(fast) == doctest::Approx(0.25 * revival_period(slow)).epsilon(1e-14));

    CHECK_THROWS_AS((void)revival_period(make_params(1.0, 11.0, 0.0)), InvalidArgumentError);
    CHECK_THROWS_AS((void)revival_period(make_params(1.0, 1.0, 0.5)), SingularDetuningError);
}
