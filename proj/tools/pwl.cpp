#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pwl/analytic.hpp"
#include "pwl/cavity.hpp"
#include "pwl/errors.hpp"
#include "pwl/integrator.hpp"
#include "pwl/io.hpp"
#include "pwl/model.hpp"
#include "pwl/quantum.hpp"
#include "pwl/spectral.hpp"
#include "pwl/sweep.hpp"

namespace fs = std::filesystem;
using namespace pwl;
using nlohmann::ordered_json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

fs::path resolve_out(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("PWL_OUT_DIR"); env != nullptr && *env != '\0')
        return env;
    return ".";
}

void write_json_file(const fs::path& path, const ordered_json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw NumericError("cannot open " + path.string() + " for writing");
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw NumericError("write to " + path.string() + " failed");
}

Branch dominant_branch(const SystemConfig& cfg, const PumpConfig& pump) {
    const Detunings det = derived_detunings(cfg, pump);
    return std::abs(det.delta) <= std::abs(det.delta_s) ? Branch::DPA : Branch::OPA;
}

int full_sim_stride(const SystemConfig& cfg, const PumpConfig& pump, double t_end,
                    double dt) {
    const double f_max_hz = std::max(cfg.omega_e_hz, pump.nu_hz + cfg.omega_e_hz);
    const double eff_dt = dt > 0.0 ? dt : 1.0 / (256.0 * f_max_hz);
    const double n = std::ceil(t_end / eff_dt);
    return std::max(1, static_cast<int>(n / 65536.0));
}

SystemConfig with_signs(const SystemConfig& base, double sign_e, double sign_g) {
    SystemConfig cfg = base;
    cfg.chi_e = sign_e * std::abs(base.chi_e);
    cfg.chi_g = sign_g * std::abs(base.chi_g);
    return cfg;
}

ComplexSeries sample_closed_form(const SystemConfig& cfg, const PumpConfig& pump,
                                 const InitialConditions& init, Branch branch,
                                 double t_end, double dt) {
    double out_dt = dt > 0.0 ? dt : t_end / 1024.0;
    const auto n = static_cast<std::size_t>(std::ceil(t_end / out_dt - 1e-9));
    if (n == 0) throw ConfigError("analytic sampling: t_end shorter than one step");
    out_dt = t_end / static_cast<double>(n);
    ComplexSeries cs;
    cs.dt = out_dt;
    cs.t0 = 0.0;
    cs.e.reserve(n + 1);
    cs.g.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) * out_dt;
        const auto [e, g] = branch == Branch::DPA ? solve_dpa(cfg, pump, init, t)
                                                  : solve_opa(cfg, pump, init, t);
        cs.e.push_back(e);
        cs.g.push_back(g);
    }
    return cs;
}

// ---- simulate ---------------------------------------------------------------

int cmd_simulate(const std::string& config_path, const std::string& mode,
                 const std::string& form, double t_end, double dt,
                 const std::string& out_flag) {
    Timer timer;
    io::RunConfig rc = io::load_run_config(config_path);
    const fs::path dir = resolve_out(out_flag);
    fs::create_directories(dir);

    if (!(std::isfinite(t_end) && t_end > 0.0))
        throw ConfigError("simulate: --t-end must be positive");

    const GainReport report = classify_regime(rc.system, rc.pump);
    const Branch dom = dominant_branch(rc.system, rc.pump);

    IntegratorSettings settings;
    settings.t_end = t_end;
    settings.dt = dt;

    if (mode == "full") {
        settings.sample_stride = full_sim_stride(rc.system, rc.pump, t_end, dt);
        const TimeSeries ts = integrate_full(rc.system, rc.pump, rc.init, settings);
        io::write_timeseries_csv(dir / "series.csv", ts);
    } else if (mode == "envelope") {
        EnvelopeForm ef;
        if (form == "detuned") {
            ef = EnvelopeForm::Detuned;
        } else if (form == "opa") {
            ef = EnvelopeForm::OPA;
        } else if (form == "dpa") {
            ef = EnvelopeForm::DPA;
        } else {  // auto: the dominant branch's reduced form
            ef = dom == Branch::DPA ? EnvelopeForm::DPA : EnvelopeForm::OPA;
        }
        const ComplexSeries cs = integrate_envelope(rc.system, rc.pump, rc.init, settings, ef);
        io::write_complex_csv(dir / "series.csv", cs);
    } else {  // analytic
        Branch br;
        if (form == "opa") {
            br = Branch::OPA;
        } else if (form == "dpa") {
            br = Branch::DPA;
        } else if (form == "auto") {
            br = dom;
        } else {
            throw ConfigError("simulate: analytic mode needs --form auto, opa, or dpa");
        }
        const ComplexSeries cs = sample_closed_form(rc.system, rc.pump, rc.init, br, t_end, dt);
        io::write_complex_csv(dir / "series.csv", cs);
    }

    write_json_file(dir / "gain_report.json", io::gain_report_json(report));

    ordered_json snap = rc.snapshot;
    snap["mode"] = mode;
    snap["form"] = form;
    snap["t_end"] = t_end;
    snap["dt"] = dt;
    io::write_manifest(dir / "run_manifest.json", "simulate", snap,
                       {"series.csv", "gain_report.json"}, timer.seconds());
    return 0;
}

// ---- figure -----------------------------------------------------------------

void figure2(const io::RunConfig& rc, const fs::path& dir, std::vector<std::string>& outputs) {
    const double diff_hz = rc.system.omega_e_hz - rc.system.omega_g_hz;
    const double sum_hz = rc.system.omega_e_hz + rc.system.omega_g_hz;
    const double t_end = 1.0;

    struct Panel {
        const char* name;
        SystemConfig cfg;
        PumpConfig pump;
        Branch branch;
    };
    PumpConfig pump_d = rc.pump, pump_s = rc.pump;
    pump_d.nu_hz = diff_hz;
    pump_s.nu_hz = sum_hz;
    const Panel panels[] = {
        {"dpa", with_signs(rc.system, +1.0, -1.0), pump_d, Branch::DPA},
        {"opa", with_signs(rc.system, +1.0, +1.0), pump_s, Branch::OPA},
    };

    for (const Panel& p : panels) {
        IntegratorSettings settings;
        settings.t_end = t_end;
        settings.sample_stride = full_sim_stride(p.cfg, p.pump, t_end, 0.0);
        const TimeSeries ts = integrate_full(p.cfg, p.pump, rc.init, settings);
        const std::string series = std::string("fig2_") + p.name + "_series.csv";
        io::write_timeseries_csv(dir / series, ts);
        outputs.push_back(series);

        const ComplexSeries env =
            sample_closed_form(p.cfg, p.pump, rc.init, p.branch, t_end, 0.0);
        const std::string envf = std::string("fig2_") + p.name + "_envelope.csv";
        io::write_envelope_csv(dir / envf, env);
        outputs.push_back(envf);

        for (Channel ch : {Channel::E, Channel::G}) {
            const Spectrum s = fft_spectrum(ts, ch, Window::Hann);
            const std::string spf = std::string("fig2_") + p.name + "_spectrum_" +
                                    (ch == Channel::E ? "e" : "g") + ".csv";
            io::write_spectrum_csv(dir / spf, s);
            outputs.push_back(spf);
        }
    }
}

void figure3(const io::RunConfig& rc, const fs::path& dir, int jobs,
             std::vector<std::string>& outputs) {
    const double diff_hz = rc.system.omega_e_hz - rc.system.omega_g_hz;
    const double sum_hz = rc.system.omega_e_hz + rc.system.omega_g_hz;

    // Pump-frequency resonance maps for each coupling-sign pattern.
    struct Panel {
        const char* name;
        double se, sg, nu_hz;
    };
    for (const Panel& p : {Panel{"dpa", +1.0, -1.0, diff_hz}, Panel{"opa", +1.0, +1.0, sum_hz}}) {
        SweepSpec spec;
        spec.axis1 = {SweepParameter::NuHz, 0.0, 3000.0, 151};
        spec.system = with_signs(rc.system, p.se, p.sg);
        spec.pump = rc.pump;
        spec.pump.nu_hz = p.nu_hz;
        spec.init = rc.init;
        spec.metric = SweepMetric::FinalPeakMagnitude;
        spec.horizon_s = 0.5;
        const std::vector<SweepCell> cells = run_sweep(spec, jobs);
        const std::string name = std::string("fig3_nu_sweep_") + p.name + ".csv";
        io::write_sweep_csv(dir / name, cells, "nu_hz", "axis2");
        outputs.push_back(name);
    }

    // Coupling-plane regime maps at the two resonances.
    const double m = std::max(std::abs(rc.system.chi_e), std::abs(rc.system.chi_g));
    for (const auto& [name, nu_hz] :
         {std::pair<const char*, double>{"diff", diff_hz}, {"sum", sum_hz}}) {
        SweepSpec spec;
        spec.axis1 = {SweepParameter::ChiE, -m, m, 21};
        spec.axis2 = SweepAxis{SweepParameter::ChiG, -m, m, 21};
        spec.system = rc.system;
        spec.pump = rc.pump;
        spec.pump.nu_hz = nu_hz;
        spec.init = rc.init;
        spec.horizon_s = 0.5;
        const std::vector<SweepCell> cells = regime_map(spec, jobs);
        const std::string fname = std::string("fig3_regime_map_") + name + ".csv";
        io::write_sweep_csv(dir / fname, cells, "chi_e", "chi_g");
        outputs.push_back(fname);
    }
}

void figure4(const io::RunConfig& rc, const fs::path& dir, std::vector<std::string>& outputs) {
    const double diff_hz = rc.system.omega_e_hz - rc.system.omega_g_hz;
    const double sum_hz = rc.system.omega_e_hz + rc.system.omega_g_hz;
    const double t_end = 0.05;

    struct Panel {
        const char* name;
        double se, sg, nu_hz;
        FlowScenario scenario;
    };
    const Panel panels[] = {
        {"exchange_diff", +1.0, +1.0, diff_hz, FlowScenario::ExchangeDiffPump},
        {"amplify_diff", +1.0, -1.0, diff_hz, FlowScenario::AmplifyDiffPump},
        {"exchange_sum", +1.0, -1.0, sum_hz, FlowScenario::ExchangeSumPump},
        {"amplify_sum", +1.0, +1.0, sum_hz, FlowScenario::AmplifySumPump},
    };

    for (const Panel& p : panels) {
        const SystemConfig cfg = with_signs(rc.system, p.se, p.sg);
        PumpConfig pump = rc.pump;
        pump.nu_hz = p.nu_hz;
        InitialConditions init;  // (1, 0): the closed forms assume E_g(0) = 0

        IntegratorSettings settings;
        settings.t_end = t_end;
        const TimeSeries ts = integrate_full(cfg, pump, init, settings);
        const EnergyFlowSeries fs_num = energy_flow_numeric(ts, cfg, pump);

        std::vector<double> fe(ts.samples_e.size()), fg(ts.samples_e.size());
        for (std::size_t i = 0; i < fe.size(); ++i) {
            const double t = ts.t0 + static_cast<double>(i) * ts.dt;
            const auto [a, b] = energy_flow_closed_form(cfg, pump, 1.0, t, p.scenario);
            fe[i] = a;
            fg[i] = b;
        }
        const std::string name = std::string("fig4_") + p.name + ".csv";
        io::write_flow_csv(dir / name, fs_num, fe, fg);
        outputs.push_back(name);
    }
}

void figure5(const io::RunConfig& rc, const fs::path& dir, int jobs,
             std::vector<std::string>& outputs) {
    CavityConfig cav;
    cav.omega_e = two_pi * rc.system.omega_e_hz;
    cav.omega_g = two_pi * rc.system.omega_g_hz;
    cav.chi = std::max(std::abs(rc.system.chi_e), std::abs(rc.system.chi_g));
    cav.a0 = rc.pump.amplitude_a0;
    cav.phi = rc.pump.phi;

    const double lg = cav.lambda_g();
    const double x_hi = 1.75 * lg;
    for (const auto& [name, branch] :
         {std::pair<const char*, CavityBranch>{"diff", CavityBranch::DiffPump},
          {"sum", CavityBranch::SumPump}}) {
        const std::vector<SweepCell> cells = sweep_antenna(
            cav, 0.0, x_hi, 701, branch, SweepMetric::FinalPeakMagnitude, 0.6, jobs);
        const std::string fname = std::string("fig5_antenna_") + name + ".csv";
        io::write_sweep_csv(dir / fname, cells, "x_r_over_lambda_g", "axis2", 1.0 / lg);
        outputs.push_back(fname);
    }

    const DpaWindows w = dpa_windows(cav, 3);
    auto interval_json = [&](const Interval& iv) {
        return ordered_json{{"lo", iv.lo},
                            {"hi", iv.hi},
                            {"lo_over_lambda_g", iv.lo / lg},
                            {"hi_over_lambda_g", iv.hi / lg}};
    };
    ordered_json jw;
    jw["lambda_e"] = cav.lambda_e();
    jw["lambda_g"] = lg;
    jw["formula"] = ordered_json::array();
    for (const Interval& iv : w.formula) jw["formula"].push_back(interval_json(iv));
    jw["exact"] = ordered_json::array();
    for (const Interval& iv : w.exact) jw["exact"].push_back(interval_json(iv));
    write_json_file(dir / "fig5_windows.json", jw);
    outputs.push_back("fig5_windows.json");
}

int cmd_figure(int n, const std::string& config_path, const std::string& out_flag,
               int jobs) {
    Timer timer;
    io::RunConfig rc = config_path.empty()
                           ? io::parse_run_config(nlohmann::json::object())
                           : io::load_run_config(config_path);
    const fs::path dir = resolve_out(out_flag);
    fs::create_directories(dir);

    std::vector<std::string> outputs;
    switch (n) {
        case 2: figure2(rc, dir, outputs); break;
        case 3: figure3(rc, dir, jobs, outputs); break;
        case 4: figure4(rc, dir, outputs); break;
        case 5: figure5(rc, dir, jobs, outputs); break;
        default: throw ConfigError("figure: n must be one of 2, 3, 4, 5");
    }

    ordered_json snap = rc.snapshot;
    snap["figure"] = n;
    io::write_manifest(dir / "run_manifest.json", "figure " + std::to_string(n), snap,
                       outputs, timer.seconds());
    return 0;
}

// ---- sweep ------------------------------------------------------------------

int cmd_sweep(const std::string& spec_path, int jobs, const std::string& out_flag) {
    Timer timer;
    io::SweepSpecFile sf = io::load_sweep_spec(spec_path);
    const fs::path dir = resolve_out(out_flag);
    fs::create_directories(dir);

    const std::vector<SweepCell> cells = run_sweep(sf.spec, jobs);

    std::string axis1_label = io::sweep_parameter_name(sf.spec.axis1.parameter);
    double scale = 1.0;
    if (sf.spec.axis1.parameter == SweepParameter::XR && sf.spec.cavity) {
        axis1_label = "x_r_over_lambda_g";
        scale = 1.0 / sf.spec.cavity->lambda_g();
    }
    const std::string axis2_label =
        sf.spec.axis2 ? io::sweep_parameter_name(sf.spec.axis2->parameter) : "axis2";

    io::write_sweep_csv(dir / "sweep.csv", cells, axis1_label, axis2_label, scale);
    write_json_file(dir / "sweep_spec.json", sf.snapshot);
    io::write_manifest(dir / "run_manifest.json", "sweep", sf.snapshot,
                       {"sweep.csv", "sweep_spec.json"}, timer.seconds());
    return 0;
}

// ---- quantum ----------------------------------------------------------------

int cmd_quantum(const std::string& config_path, int n_max, const std::string& out_flag) {
    Timer timer;
    io::RunConfig rc = io::load_run_config(config_path);
    const fs::path dir = resolve_out(out_flag);
    fs::create_directories(dir);
    if (n_max < 1) throw ConfigError("quantum: --nmax must be >= 1");

    const nlohmann::json q =
        rc.quantum.is_null() ? nlohmann::json::object() : rc.quantum;
    PumpBranch branch;
    const std::string branch_name = q.value("branch", std::string());
    if (branch_name == "diff") {
        branch = PumpBranch::DiffPump;
    } else if (branch_name == "sum") {
        branch = PumpBranch::SumPump;
    } else if (branch_name.empty()) {
        branch = dominant_branch(rc.system, rc.pump) == Branch::DPA ? PumpBranch::DiffPump
                                                                    : PumpBranch::SumPump;
    } else {
        throw ConfigError("quantum: branch must be \"diff\" or \"sum\"");
    }

    const QuantumSystem sys = make_quantum_system(rc.system, rc.pump, branch);
    const cplx omega = gain_rate(
        rc.system, rc.pump, branch == PumpBranch::DiffPump ? Branch::DPA : Branch::OPA);
    const double omega_mag = std::abs(omega);
    const double t_end = q.value("t_end", omega_mag > 0.0 ? two_pi / omega_mag : 0.1);

    const cplx alpha_e{q.value("alpha_e_re", 0.02), q.value("alpha_e_im", 0.0)};
    const cplx alpha_g{q.value("alpha_g_re", 0.0), q.value("alpha_g_im", 0.0)};

    // Step-bound estimate mirrors the evolver's own check.
    auto bound_scale = [&](int nm) {
        const Eigen::MatrixXcd ae = mode_annihilator(nm, true);
        const Eigen::MatrixXcd ag = mode_annihilator(nm, false);
        Eigen::MatrixXcd a_term, b_term;
        if (branch == PumpBranch::DiffPump) {
            a_term = sys.kappa_g * sys.pump * (ae.adjoint() * ag);
            b_term = sys.kappa_e * std::conj(sys.pump) * (ae * ag.adjoint());
        } else {
            a_term = sys.kappa_g * sys.pump * (ae.adjoint() * ag.adjoint());
            b_term = sys.kappa_e * std::conj(sys.pump) * (ae * ag);
        }
        return a_term.norm() + b_term.norm() + std::abs(sys.detuning);
    };
    const double scale_2x = bound_scale(2 * n_max);  // the stiffer of the two runs
    const double dt = q.value("dt", std::min(t_end / 16384.0, 0.009 / scale_2x));

    const QuantumRun run = evolve(coherent_state(alpha_e, alpha_g, n_max), sys, t_end, dt);
    const QuantumRun run2x =
        evolve(coherent_state(alpha_e, alpha_g, 2 * n_max), sys, t_end, dt);

    io::write_quantum_csv(dir / "quantum_trajectory.csv", run);

    const cplx pump_phasor = rc.pump.phasor();
    const double defect = hermiticity_defect(
        build_hamiltonian(rc.system.chi_e, rc.system.chi_g, pump_phasor,
                          rc.system.omega_e(), rc.system.omega_g(), n_max));
    const double defect_2x = hermiticity_defect(
        build_hamiltonian(rc.system.chi_e, rc.system.chi_g, pump_phasor,
                          rc.system.omega_e(), rc.system.omega_g(), 2 * n_max));

    const cplx ae_final = run.a_e.back();
    const cplx ae_final_2x = run2x.a_e.back();
    const double n_final = run.n_total.back();
    const double n_final_2x = run2x.n_total.back();

    ordered_json rep;
    rep["n_max"] = n_max;
    rep["defect"] = defect;
    rep["defect_2x"] = defect_2x;
    rep["branch"] = branch == PumpBranch::DiffPump ? "diff" : "sum";
    rep["t_end"] = t_end;
    rep["dt"] = dt;
    rep["final_a_e_re"] = ae_final.real();
    rep["final_a_e_im"] = ae_final.imag();
    rep["final_a_e_re_2x"] = ae_final_2x.real();
    rep["final_a_e_im_2x"] = ae_final_2x.imag();
    rep["rel_change_a_e"] = std::abs(ae_final - ae_final_2x) /
                            std::max(std::abs(ae_final_2x), 1e-300);
    rep["final_n_total"] = n_final;
    rep["final_n_total_2x"] = n_final_2x;
    rep["rel_change_n_total"] =
        std::abs(n_final - n_final_2x) / std::max(std::abs(n_final_2x), 1e-300);
    rep["top_shell_max"] = run.top_shell_max;
    rep["top_shell_max_2x"] = run2x.top_shell_max;
    write_json_file(dir / "defect_report.json", rep);

    ordered_json snap = rc.snapshot;
    snap["n_max"] = n_max;
    io::write_manifest(dir / "run_manifest.json", "quantum", snap,
                       {"quantum_trajectory.csv", "defect_report.json"}, timer.seconds());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parametric-wave laboratory: simulate, sweep, and analyze two-mode "
                 "parametric amplification"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Integrate or evaluate one configuration");
    std::string sim_config, sim_mode = "full", sim_form = "auto", sim_out;
    double sim_t_end = 0.5, sim_dt = 0.0;
    long long sim_seed = 0;
    sim->add_option("config", sim_config, "JSON configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sim->add_option("--mode", sim_mode, "full | envelope | analytic")
        ->check(CLI::IsMember({"full", "envelope", "analytic"}));
    sim->add_option("--form", sim_form, "auto | detuned | opa | dpa")
        ->check(CLI::IsMember({"auto", "detuned", "opa", "dpa"}));
    sim->add_option("--t-end", sim_t_end, "simulated duration, s");
    sim->add_option("--dt", sim_dt, "step / output spacing, s (0 = auto)");
    sim->add_option("--out", sim_out, "output directory");
    sim->add_option("--seed", sim_seed, "reserved (deterministic model)");

    // figure
    auto* fig = app.add_subcommand("figure", "Emit the data files behind one figure");
    int fig_n = 2;
    std::string fig_config, fig_out;
    int fig_jobs = 0;
    long long fig_seed = 0;
    fig->add_option("n", fig_n, "figure number (2-5)")->required();
    fig->add_option("config", fig_config, "optional JSON overrides")
        ->check(CLI::ExistingFile);
    fig->add_option("--out", fig_out, "output directory");
    fig->add_option("--jobs", fig_jobs, "worker threads (0 = auto)");
    fig->add_option("--seed", fig_seed, "reserved (deterministic model)");

    // sweep
    auto* swp = app.add_subcommand("sweep", "Run a parameter sweep from a spec file");
    std::string swp_spec, swp_out;
    int swp_jobs = 0;
    long long swp_seed = 0;
    swp->add_option("spec", swp_spec, "JSON sweep specification")
        ->required()
        ->check(CLI::ExistingFile);
    swp->add_option("--jobs", swp_jobs, "worker threads (0 = auto)");
    swp->add_option("--out", swp_out, "output directory");
    swp->add_option("--seed", swp_seed, "reserved (deterministic model)");

    // quantum
    auto* qtm = app.add_subcommand("quantum", "Quantum trajectory and Hermiticity report");
    std::string qtm_config, qtm_out;
    int qtm_nmax = 8;
    long long qtm_seed = 0;
    qtm->add_option("config", qtm_config, "JSON configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    qtm->add_option("--nmax", qtm_nmax, "Fock cutoff per mode");
    qtm->add_option("--out", qtm_out, "output directory");
    qtm->add_option("--seed", qtm_seed, "reserved (deterministic model)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed())
            return cmd_simulate(sim_config, sim_mode, sim_form, sim_t_end, sim_dt, sim_out);
        if (fig->parsed()) return cmd_figure(fig_n, fig_config, fig_out, fig_jobs);
        if (swp->parsed()) return cmd_sweep(swp_spec, swp_jobs, swp_out);
        if (qtm->parsed()) return cmd_quantum(qtm_config, qtm_nmax, qtm_out);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
