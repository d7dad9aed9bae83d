#include "cli.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "mqed/config.hpp"
#include "mqed/csv.hpp"
#include "mqed/damping.hpp"
#include "mqed/evolve.hpp"
#include "mqed/hamiltonian.hpp"
#include "mqed/protocol.hpp"
#include "mqed/squeezing.hpp"

namespace mqed::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void print_warnings(const WarningList& warnings, std::ostream& err) {
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }
}

void scale_times(TimeSeries& ts, double factor) {
    for (double& t : ts.times) {
        t *= factor;
    }
}

struct DeriveOpts {
    std::string config;
    std::string prefactor = "exact";
    double g_over_delta = 0.1;
};

void run_derive(const DeriveOpts& o, std::ostream& out) {
    const PhysicalSetup setup = load_config(o.config);
    const FieldParams fields = derive_field_params(setup);
    const double g_exact = coupling_constant(setup, fields, PrefactorMode::exact);
    const double g_paper = coupling_constant(setup, fields, PrefactorMode::paper);
    const double g = (o.prefactor == "paper") ? g_paper : g_exact;
    const double delta = g / o.g_over_delta;
    const double delta_f = g * g / delta;

    std::vector<std::pair<std::string, double>> rows = {
        {"field_offset_t", fields.a},
        {"field_gradient_t_per_m", fields.gradient},
        {"zero_point_length_m", fields.lambda},
        {"resonant_rf_rad_per_s", resonant_rf_frequency(setup, fields)},
        {"k_eff_n_per_m", effective_spring_constant(setup)},
        {"g_exact_rad_per_s", g_exact},
        {"g_paper_rad_per_s", g_paper},
        {"g_rad_per_s", g},
        {"delta_rad_per_s", delta},
        {"delta_f_hz", delta_f},
        {"delta_f_cyclic_hz", delta_f / kTwoPi},
        {"t_quantum_k", quantum_regime_temperature(setup.omega_c)},
        {"resolving_power", estimate_resolving_power(delta_f, setup.omega_c)},
    };
    for (const Scenario& s : scenario_table()) {
        rows.emplace_back("scenario_" + s.name + "_g_rad_per_s", s.g);
        rows.emplace_back("scenario_" + s.name + "_delta_f_hz", s.delta_f);
        rows.emplace_back("scenario_" + s.name + "_t_quantum_k", s.t_quantum);
    }
    write_report(out, rows);
}

struct SqueezeOpts {
    double g_over_delta = 0.1;
    double g_over_omega = 0.5;
    int k = 0;
    double omega_c = 1.0;
    double periods = 1.0;
    int samples = 2001;
};

void run_squeeze(const SqueezeOpts& o, std::ostream& out) {
    const ModelParams p = params_from_ratios(o.g_over_delta, o.g_over_omega,
                                             o.omega_c);
    const SqueezeParams sp = squeeze_params(p, o.k);
    const double t_max = o.periods * kTwoPi / sp.omega;
    TimeSeries ts;
    ts.columns = {{"r", {}}, {"r_abs", {}}};
    for (double t : linspace(0.0, t_max, o.samples)) {
        const double r = squeeze_factor(sp, t);
        ts.times.push_back(p.g * t);
        ts.columns[0].values.push_back(r);
        ts.columns[1].values.push_back(std::abs(r));
    }
    write_csv(out, ts, "t_g");
}

struct SweepOpts {
    int points = 25;
    double omega_c = 1.0;
};

void run_sweep(const SweepOpts& o, std::ostream& out) {
    out << "g_over_delta,g_over_omega,max_r,max_r_half\n";
    for (double gd : linspace(0.01, 0.1, o.points)) {
        for (double gw : linspace(0.01, 0.99, o.points)) {
            const ModelParams p = params_from_ratios(gd, gw, o.omega_c);
            const SqueezeParams sp = squeeze_params(p, 0);
            const double max_r = 2.0 * std::log(sp.n_factor);
            out << format_double(gd) << ',' << format_double(gw) << ','
                << format_double(max_r) << ',' << format_double(0.5 * max_r)
                << '\n';
        }
    }
}

struct RevivalOpts {
    double alpha_re = 1.0;
    double alpha_im = 0.0;
    double c0 = std::numbers::sqrt2 / 2.0;
    double c1 = std::numbers::sqrt2 / 2.0;
    double omega_c = 1.0;
    double delta = 10.0;
    double g = 1.0;
    double t_max = 70.0;  // in units of 1/g
    int samples = 10001;
    int n_cut = 0;  // 0: choose from alpha
    bool no_oracle = false;
};

void run_revival(const RevivalOpts& o, std::ostream& out, std::ostream& err) {
    const ModelParams p = make_params(o.omega_c, o.omega_c + o.delta, o.g);
    const std::complex<double> alpha(o.alpha_re, o.alpha_im);
    const std::complex<double> c0(o.c0, 0.0), c1(o.c1, 0.0);

    TimeSeries ts;
    ts.columns = {{"x_analytic", {}}, {"env_analytic", {}}};
    std::vector<double> t_grid;
    for (double tg : linspace(0.0, o.t_max, o.samples)) {
        const double t = tg / o.g;
        t_grid.push_back(t);
        ts.times.push_back(tg);
        ts.columns[0].values.push_back(mean_position(p, alpha, c0, c1, t));
        ts.columns[1].values.push_back(
            mean_position_envelope(p, alpha, c0, c1, t));
    }

    if (!o.no_oracle) {
        const SpaceSpec space{o.n_cut > 0 ? o.n_cut : default_n_cut(alpha)};
        const QuantumState psi0 =
            coherent_state(space, alpha, SpinAmplitudes{c0, c1});
        WarningList warnings;
        const Propagator prop(branch_diagonal_hamiltonian(p, space, &warnings));
        const Operators ops = build_operators(space);
        TimeSeries::Column x_num{"x_numeric", {}};
        TimeSeries::Column env_num{"env_numeric", {}};
        for (double t : t_grid) {
            const std::complex<double> a_mean =
                expectation(prop.apply(psi0, t), ops.a);
            x_num.values.push_back(2.0 * a_mean.real());
            env_num.values.push_back(2.0 * std::abs(a_mean));
        }
        ts.columns.push_back(std::move(x_num));
        ts.columns.push_back(std::move(env_num));
        print_warnings(warnings, err);
    }
    write_csv(out, ts, "t_g");
}

struct RabiOpts {
    double g_over_omega = 0.01;
    double omega_c = 1.0;
    double periods = 1.0;
    int samples = 2001;
    int n_cut = 24;
};

void run_rabi(const RabiOpts& o, std::ostream& out) {
    const double g = o.g_over_omega * o.omega_c;
    const ModelParams p = make_params(o.omega_c, o.omega_c, g);
    const SpaceSpec space{o.n_cut};
    const QuantumState psi0 = fock_state(space, 0, spin_up());
    TimeSeries ts = rwa_comparison(p, psi0, o.periods * std::numbers::pi / g,
                                   o.samples);
    scale_times(ts, g);
    write_csv(out, ts, "t_g");
}

struct ProtocolOpts {
    double g_over_delta = 0.05;
    double g_over_omega = 0.05;
    double omega_c = 1.0;
    double half_period = 20.0;  // in units of 1/delta
    int cycles = 10;
    double alpha_re = 1.0;
    double alpha_im = 0.0;
    std::string spin = "down";
    int samples_per_segment = 64;
    int n_cut = 0;
};

void run_protocol(const ProtocolOpts& o, std::ostream& out, std::ostream& err) {
    const ModelParams p = params_from_ratios(o.g_over_delta, o.g_over_omega,
                                             o.omega_c);
    const std::complex<double> alpha(o.alpha_re, o.alpha_im);
    const SpaceSpec space{o.n_cut > 0 ? o.n_cut : default_n_cut(alpha)};
    const SpinAmplitudes spin = (o.spin == "up") ? spin_up() : spin_down();
    const QuantumState psi0 = coherent_state(space, alpha, spin);
    const SwitchSchedule schedule{o.half_period / p.delta, o.cycles};
    TimeSeries ts = simulate_switching(p, schedule, psi0,
                                       o.samples_per_segment);
    print_warnings(ts.warnings, err);
    scale_times(ts, p.g);
    write_csv(out, ts, "t_g");
}

struct DampOpts {
    double kappa_over_g = 0.2;
    double n_th = 10.0;
    double t_max = 60.0;
    int samples = 1200;
    double tol = 1e-10;
    std::string time_unit = "g";
    double q_factor = 0.0;
    double n0 = 0.0;
    double sz0 = 0.0;
    double x0 = 0.0;
    double nsz0 = 0.0;
    bool initial_given = false;
};

void run_damp(const DampOpts& o, std::ostream& out, std::ostream& err) {
    const DampingParams p{o.kappa_over_g, 1.0, o.n_th, o.q_factor};
    LangevinState initial{o.n_th + 0.5, 0.5, 0.0, 0.0};
    if (o.initial_given) {
        initial = {o.n0, o.sz0, o.x0, o.nsz0};
    }
    const bool kappa_time = (o.time_unit == "kappa");
    if (kappa_time && !(p.kappa > 0.0)) {
        throw InvalidArgumentError("kappa-scaled time needs kappa > 0");
    }
    const double unit = kappa_time ? p.kappa : p.g;
    TimeSeries ts = integrate(initial, p, linspace(0.0, o.t_max / unit, o.samples),
                              o.tol);
    print_warnings(ts.warnings, err);
    scale_times(ts, unit);
    write_csv(out, ts, kappa_time ? "t_k" : "t_g");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Spin-resonator dynamics toolkit: parameter derivation, "
                 "squeezing and collapse-revival series, damping moments, "
                 "switching protocol",
                 "mqed"};
    app.require_subcommand(1);

    std::string output = "-";
    std::function<void(std::ostream&)> action;

    auto add_output = [&output](CLI::App* sub) {
        sub->add_option("-o,--output", output,
                        "Destination path; '-' writes to standard output");
    };

    auto derive_opts = std::make_shared<DeriveOpts>();
    {
        CLI::App* sub = app.add_subcommand(
            "derive", "Report derived field, coupling and detection figures");
        sub->add_option("--config", derive_opts->config, "Setup config file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--prefactor", derive_opts->prefactor,
                        "Coupling prefactor form")
            ->check(CLI::IsMember({"exact", "paper"}));
        sub->add_option("--g-over-delta", derive_opts->g_over_delta,
                        "Ratio fixing the detuning for the shift estimate")
            ->check(CLI::PositiveNumber);
        add_output(sub);
        sub->callback([&action, derive_opts] {
            action = [derive_opts](std::ostream& o) { run_derive(*derive_opts, o); };
        });
    }

    auto squeeze_opts = std::make_shared<SqueezeOpts>();
    {
        CLI::App* sub = app.add_subcommand(
            "squeeze", "Dynamical squeeze factor time series for one branch");
        sub->add_option("--g-over-delta", squeeze_opts->g_over_delta)
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--g-over-omega", squeeze_opts->g_over_omega)
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--k", squeeze_opts->k, "Spin branch (0: up, 1: down)")
            ->check(CLI::Range(0, 1));
        sub->add_option("--omega-c", squeeze_opts->omega_c)
            ->check(CLI::PositiveNumber);
        sub->add_option("--periods", squeeze_opts->periods,
                        "Quasi-excitation periods to cover")
            ->check(CLI::PositiveNumber);
        sub->add_option("--samples", squeeze_opts->samples)
            ->check(CLI::Range(2, 10000000));
        add_output(sub);
        sub->callback([&action, squeeze_opts] {
            action = [squeeze_opts](std::ostream& o) {
                run_squeeze(*squeeze_opts, o);
            };
        });
    }

    auto sweep_opts = std::make_shared<SweepOpts>();
    {
        CLI::App* sub = app.add_subcommand(
            "sweep-squeeze",
            "Maximum squeeze factor over the coupling-ratio grid");
        sub->add_option("--points", sweep_opts->points, "Points per axis")
            ->check(CLI::Range(2, 10000));
        sub->add_option("--omega-c", sweep_opts->omega_c)
            ->check(CLI::PositiveNumber);
        add_output(sub);
        sub->callback([&action, sweep_opts] {
            action = [sweep_opts](std::ostream& o) { run_sweep(*sweep_opts, o); };
        });
    }

    auto revival_opts = std::make_shared<RevivalOpts>();
    {
        CLI::App* sub = app.add_subcommand(
            "revival",
            "Mean-position collapse and revival: analytic series, envelope "
            "and numerical oracle");
        sub->add_option("--alpha-re", revival_opts->alpha_re);
        sub->add_option("--alpha-im", revival_opts->alpha_im);
        sub->add_option("--c0", revival_opts->c0, "Spin-up amplitude");
        sub->add_option("--c1", revival_opts->c1, "Spin-down amplitude");
        sub->add_option("--omega-c", revival_opts->omega_c)
            ->check(CLI::PositiveNumber);
        sub->add_option("--delta", revival_opts->delta)
            ->check(CLI::PositiveNumber);
        sub->add_option("--g", revival_opts->g)->check(CLI::PositiveNumber);
        sub->add_option("--tmax", revival_opts->t_max, "End time in 1/g units")
            ->check(CLI::PositiveNumber);
        sub->add_option("--samples", revival_opts->samples)
            ->check(CLI::Range(2, 10000000));
        sub->add_option("--n-cut", revival_opts->n_cut,
                        "Fock cutoff; 0 picks one from alpha")
            ->check(CLI::Range(0, 100000));
        sub->add_flag("--no-oracle", revival_opts->no_oracle,
                      "Skip the numerical columns");
        add_output(sub);
        sub->callback([&action, revival_opts, &err] {
            action = [revival_opts, &err](std::ostream& o) {
                run_revival(*revival_opts, o, err);
            };
        });
    }

    auto rabi_opts = std::make_shared<RabiOpts>();
    {
        CLI::App* sub = app.add_subcommand(
            "rabi", "Resonant spin-up population: full Hamiltonian vs its "
                    "excitation-conserving part");
        sub->add_option("--g-over-omega", rabi_opts->g_over_omega)
            ->check(CLI::PositiveNumber);
        sub->add_option("--omega-c", rabi_opts->omega_c)
            ->check(CLI::PositiveNumber);
        sub->add_option("--periods", rabi_opts->periods,
                        "Population oscillation periods (pi/g each)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--samples", rabi_opts->samples)
            ->check(CLI::Range(2, 10000000));
        sub->add_option("--n-cut", rabi_opts->n_cut)->check(CLI::Range(1, 100000));
        add_output(sub);
        sub->callback([&action, rabi_opts] {
            action = [rabi_opts](std::ostream& o) { run_rabi(*rabi_opts, o); };
        });
    }

    auto protocol_opts = std::make_shared<ProtocolOpts>();
    {
        CLI::App* sub = app.add_subcommand(
            "protocol", "Alternating drive-phase switching simulation");
        sub->add_option("--g-over-delta", protocol_opts->g_over_delta)
            ->check(CLI::PositiveNumber);
        sub->add_option("--g-over-omega", protocol_opts->g_over_omega)
            ->check(CLI::PositiveNumber);
        sub->add_option("--omega-c", protocol_opts->omega_c)
            ->check(CLI::PositiveNumber);
        sub->add_option("--half-period", protocol_opts->half_period,
                        "Segment length in 1/delta units")
            ->check(CLI::PositiveNumber);
        sub->add_option("--cycles", protocol_opts->cycles)
            ->check(CLI::Range(1, 100000));
        sub->add_option("--alpha-re", protocol_opts->alpha_re);
        sub->add_option("--alpha-im", protocol_opts->alpha_im);
        sub->add_option("--spin", protocol_opts->spin, "Initial spin state")
            ->check(CLI::IsMember({"up", "down"}));
        sub->add_option("--samples-per-segment",
                        protocol_opts->samples_per_segment)
            ->check(CLI::Range(1, 1000000));
        sub->add_option("--n-cut", protocol_opts->n_cut,
                        "Fock cutoff; 0 picks one from alpha")
            ->check(CLI::Range(0, 100000));
        add_output(sub);
        sub->callback([&action, protocol_opts, &err] {
            action = [protocol_opts, &err](std::ostream& o) {
                run_protocol(*protocol_opts, o, err);
            };
        });
    }

    auto damp_opts = std::make_shared<DampOpts>();
    {
        CLI::App* sub = app.add_subcommand(
            "damp", "Integrate the damped expectation-value system");
        sub->add_option("--kappa-over-g", damp_opts->kappa_over_g)
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--nth", damp_opts->n_th, "Bath mean occupation")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--tmax", damp_opts->t_max, "End time in the chosen unit")
            ->check(CLI::PositiveNumber);
        sub->add_option("--samples", damp_opts->samples)
            ->check(CLI::Range(2, 10000000));
        sub->add_option("--tol", damp_opts->tol, "Integrator tolerance");
        sub->add_option("--time-unit", damp_opts->time_unit,
                        "Time column scale: g or kappa")
            ->check(CLI::IsMember({"g", "kappa"}));
        sub->add_option("--q", damp_opts->q_factor, "Quality factor (stored)")
            ->check(CLI::NonNegativeNumber);
        auto* n0 = sub->add_option("--n0", damp_opts->n0,
                                   "Initial n (default nth + 1/2)");
        sub->add_option("--sz0", damp_opts->sz0, "Initial sz (default 1/2)");
        sub->add_option("--x0", damp_opts->x0, "Initial x (default 0)");
        sub->add_option("--nsz0", damp_opts->nsz0, "Initial nsz (default 0)");
        add_output(sub);
        sub->callback([&action, damp_opts, n0, sub, &err] {
            damp_opts->initial_given =
                n0->count() > 0 || sub->count("--sz0") > 0 ||
                sub->count("--x0") > 0 || sub->count("--nsz0") > 0;
            if (damp_opts->initial_given && n0->count() == 0) {
                damp_opts->n0 = damp_opts->n_th + 0.5;
            }
            if (damp_opts->initial_given && sub->count("--sz0") == 0) {
                damp_opts->sz0 = 0.5;
            }
            action = [damp_opts, &err](std::ostream& o) {
                run_damp(*damp_opts, o, err);
            };
        });
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        std::ostringstream buffer;
        action(buffer);
        if (output == "-") {
            out << buffer.str();
        } else {
            std::ofstream file(output, std::ios::binary);
            if (!file) {
                throw ConfigError("cannot open output file " + output);
            }
            file << buffer.str();
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidSetupError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace mqed::cli
