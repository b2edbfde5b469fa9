#include "pwl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "pwl/errors.hpp"

namespace pwl::io {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: LF newlines everywhere
    if (!out) throw NumericError("io: cannot open " + path.string() + " for writing");
    return out;
}

void close_checked(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw NumericError("io: write to " + path.string() + " failed");
}

json number_or_string(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

}  // namespace

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string regime_to_string(Regime r) {
    switch (r) {
        case Regime::Amplify: return "amplify";
        case Regime::Exchange: return "exchange";
        case Regime::BelowThreshold: return "below_threshold";
        case Regime::OffResonant: return "off_resonant";
    }
    return "unknown";
}

std::string branch_to_string(Branch b) {
    return b == Branch::OPA ? "opa" : "dpa";
}

void write_timeseries_csv(const std::filesystem::path& path, const TimeSeries& ts) {
    std::ofstream out = open_out(path);
    out << "t,e,g,de,dg\n";
    for (std::size_t i = 0; i < ts.samples_e.size(); ++i) {
        const double t = ts.t0 + static_cast<double>(i) * ts.dt;
        out << format_g17(t) << ',' << format_g17(ts.samples_e[i]) << ','
            << format_g17(ts.samples_g[i]) << ',' << format_g17(ts.deriv_e[i]) << ','
            << format_g17(ts.deriv_g[i]) << '\n';
    }
    close_checked(out, path);
}

void write_complex_csv(const std::filesystem::path& path, const ComplexSeries& cs) {
    std::ofstream out = open_out(path);
    out << "t,re_e,im_e,re_g,im_g\n";
    for (std::size_t i = 0; i < cs.e.size(); ++i) {
        const double t = cs.t0 + static_cast<double>(i) * cs.dt;
        out << format_g17(t) << ',' << format_g17(cs.e[i].real()) << ','
            << format_g17(cs.e[i].imag()) << ',' << format_g17(cs.g[i].real()) << ','
            << format_g17(cs.g[i].imag()) << '\n';
    }
    close_checked(out, path);
}

void write_envelope_csv(const std::filesystem::path& path, const ComplexSeries& cs) {
    std::ofstream out = open_out(path);
    out << "t,re_e,im_e,abs_e,re_g,im_g,abs_g\n";
    for (std::size_t i = 0; i < cs.e.size(); ++i) {
        const double t = cs.t0 + static_cast<double>(i) * cs.dt;
        out << format_g17(t) << ',' << format_g17(cs.e[i].real()) << ','
            << format_g17(cs.e[i].imag()) << ',' << format_g17(std::abs(cs.e[i])) << ','
            << format_g17(cs.g[i].real()) << ',' << format_g17(cs.g[i].imag()) << ','
            << format_g17(std::abs(cs.g[i])) << '\n';
    }
    close_checked(out, path);
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s) {
    std::ofstream out = open_out(path);
    out << "freq_hz,magnitude\n";
    for (std::size_t k = 0; k < s.freq_hz.size(); ++k)
        out << format_g17(s.freq_hz[k]) << ',' << format_g17(s.magnitude[k]) << '\n';
    close_checked(out, path);
}

void write_flow_csv(const std::filesystem::path& path, const EnergyFlowSeries& fs,
                    const std::vector<double>& flow_e_closed,
                    const std::vector<double>& flow_g_closed) {
    if (flow_e_closed.size() != fs.flow_e.size() || flow_g_closed.size() != fs.flow_g.size())
        throw ConfigError("write_flow_csv: closed-form columns must match the series");
    std::ofstream out = open_out(path);
    out << "t,flow_e,flow_g,flow_e_closed,flow_g_closed\n";
    for (std::size_t i = 0; i < fs.flow_e.size(); ++i) {
        const double t = fs.t0 + static_cast<double>(i) * fs.dt;
        out << format_g17(t) << ',' << format_g17(fs.flow_e[i]) << ','
            << format_g17(fs.flow_g[i]) << ',' << format_g17(flow_e_closed[i]) << ','
            << format_g17(flow_g_closed[i]) << '\n';
    }
    close_checked(out, path);
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepCell>& cells,
                     const std::string& axis1_label, const std::string& axis2_label,
                     double axis1_scale) {
    std::ofstream out = open_out(path);
    out << axis1_label << ',' << axis2_label << ",metric,regime\n";
    for (const SweepCell& c : cells) {
        out << format_g17(c.axis1 * axis1_scale) << ',' << format_g17(c.axis2) << ','
            << format_g17(c.metric) << ','
            << (c.error ? std::string("error") : regime_to_string(c.report.regime)) << '\n';
    }
    close_checked(out, path);
}

void write_quantum_csv(const std::filesystem::path& path, const QuantumRun& run) {
    std::ofstream out = open_out(path);
    out << "t,re_ae,im_ae,re_ag,im_ag,re_H,im_H,norm\n";
    for (std::size_t i = 0; i < run.t.size(); ++i) {
        out << format_g17(run.t[i]) << ',' << format_g17(run.a_e[i].real()) << ','
            << format_g17(run.a_e[i].imag()) << ',' << format_g17(run.a_g[i].real()) << ','
            << format_g17(run.a_g[i].imag()) << ',' << format_g17(run.h_exp[i].real()) << ','
            << format_g17(run.h_exp[i].imag()) << ',' << format_g17(run.norm[i]) << '\n';
    }
    close_checked(out, path);
}

namespace {

SystemConfig parse_system(const json& j) {
    SystemConfig cfg = make_baseline_system(+1.0, -1.0);
    cfg.omega_e_hz = j.value("omega_e_hz", cfg.omega_e_hz);
    cfg.omega_g_hz = j.value("omega_g_hz", cfg.omega_g_hz);
    cfg.chi_e = j.value("chi_e", cfg.chi_e);
    cfg.chi_g = j.value("chi_g", cfg.chi_g);
    return cfg;
}

PumpConfig parse_pump(const json& j) {
    PumpConfig pump = make_baseline_pump(220.0);
    pump.amplitude_a0 = j.value("a0", pump.amplitude_a0);
    pump.nu_hz = j.value("nu_hz", pump.nu_hz);
    pump.phi = j.value("phi_rad", pump.phi);
    return pump;
}

InitialConditions parse_init(const json& j) {
    InitialConditions init;
    init.envelope_e0 = {j.value("e0_re", 1.0), j.value("e0_im", 0.0)};
    init.envelope_g0 = {j.value("g0_re", 0.0), j.value("g0_im", 0.0)};
    return init;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("io: cannot read " + path.string());
    return json::parse(in);  // parse_error propagates to the CLI layer
}

}  // namespace

RunConfig parse_run_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    RunConfig rc;
    rc.system = parse_system(j);
    rc.pump = parse_pump(j.value("pump", json::object()));
    rc.init = parse_init(j.value("init", json::object()));
    rc.quantum = j.value("quantum", json());
    validate(rc.system);
    validate(rc.pump);

    ordered_json snap;
    snap["omega_e_hz"] = rc.system.omega_e_hz;
    snap["omega_g_hz"] = rc.system.omega_g_hz;
    snap["chi_e"] = rc.system.chi_e;
    snap["chi_g"] = rc.system.chi_g;
    snap["pump"] = {{"a0", rc.pump.amplitude_a0},
                    {"nu_hz", rc.pump.nu_hz},
                    {"phi_rad", rc.pump.phi}};
    snap["init"] = {{"e0_re", rc.init.envelope_e0.real()},
                    {"e0_im", rc.init.envelope_e0.imag()},
                    {"g0_re", rc.init.envelope_g0.real()},
                    {"g0_im", rc.init.envelope_g0.imag()}};
    if (!rc.quantum.is_null()) snap["quantum"] = rc.quantum;
    rc.snapshot = std::move(snap);
    return rc;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    return parse_run_config(load_json(path));
}

namespace {

SweepParameter parse_parameter(const std::string& name) {
    if (name == "nu_hz") return SweepParameter::NuHz;
    if (name == "chi_e") return SweepParameter::ChiE;
    if (name == "chi_g") return SweepParameter::ChiG;
    if (name == "x_r") return SweepParameter::XR;
    throw ConfigError("sweep spec: unknown parameter '" + name + "'");
}

SweepMetric parse_metric(const std::string& name) {
    if (name == "final_peak_magnitude") return SweepMetric::FinalPeakMagnitude;
    if (name == "fitted_growth_rate") return SweepMetric::FittedGrowthRate;
    if (name == "analytic_re_omega") return SweepMetric::AnalyticReOmega;
    throw ConfigError("sweep spec: unknown metric '" + name + "'");
}

SweepAxis parse_axis(const json& j) {
    if (!j.is_object()) throw ConfigError("sweep spec: axis must be an object");
    SweepAxis ax;
    ax.parameter = parse_parameter(j.value("parameter", std::string("nu_hz")));
    if (!j.contains("min") || !j.contains("max"))
        throw ConfigError("sweep spec: axis needs min and max");
    ax.min = j.at("min").get<double>();
    ax.max = j.at("max").get<double>();
    ax.count = j.value("count", 2);
    return ax;
}

CavityConfig parse_cavity(const json& j) {
    CavityConfig cav;
    cav.omega_e = two_pi * j.value("omega_e_hz", cav.omega_e / two_pi);
    cav.omega_g = two_pi * j.value("omega_g_hz", cav.omega_g / two_pi);
    cav.c = j.value("c", cav.c);
    cav.chi = j.value("chi", cav.chi);
    cav.x_r = j.value("x_r", cav.x_r);
    cav.a0 = j.value("a0", cav.a0);
    cav.nu = two_pi * j.value("nu_hz", cav.nu / two_pi);
    cav.phi = j.value("phi_rad", cav.phi);
    return cav;
}

}  // namespace

std::string sweep_parameter_name(SweepParameter p) {
    switch (p) {
        case SweepParameter::NuHz: return "nu_hz";
        case SweepParameter::ChiE: return "chi_e";
        case SweepParameter::ChiG: return "chi_g";
        case SweepParameter::XR: return "x_r";
    }
    return "unknown";
}

SweepSpecFile parse_sweep_spec(const json& j) {
    if (!j.is_object()) throw ConfigError("sweep spec: top level must be a JSON object");
    SweepSpecFile sf;
    if (!j.contains("axis1")) throw ConfigError("sweep spec: axis1 is required");
    sf.spec.axis1 = parse_axis(j.at("axis1"));
    if (j.contains("axis2") && !j.at("axis2").is_null())
        sf.spec.axis2 = parse_axis(j.at("axis2"));
    sf.spec.system = parse_system(j.value("system", json::object()));
    sf.spec.pump = parse_pump(j.value("pump", json::object()));
    sf.spec.init = parse_init(j.value("init", json::object()));
    if (j.contains("cavity") && !j.at("cavity").is_null())
        sf.spec.cavity = parse_cavity(j.at("cavity"));
    sf.spec.metric = parse_metric(j.value("metric", std::string("final_peak_magnitude")));
    sf.spec.horizon_s = j.value("horizon_s", 0.5);

    auto axis_json = [](const SweepAxis& ax) {
        return ordered_json{{"parameter", sweep_parameter_name(ax.parameter)},
                            {"min", ax.min},
                            {"max", ax.max},
                            {"count", ax.count}};
    };
    ordered_json snap;
    snap["axis1"] = axis_json(sf.spec.axis1);
    if (sf.spec.axis2) snap["axis2"] = axis_json(*sf.spec.axis2);
    snap["system"] = {{"omega_e_hz", sf.spec.system.omega_e_hz},
                      {"omega_g_hz", sf.spec.system.omega_g_hz},
                      {"chi_e", sf.spec.system.chi_e},
                      {"chi_g", sf.spec.system.chi_g}};
    snap["pump"] = {{"a0", sf.spec.pump.amplitude_a0},
                    {"nu_hz", sf.spec.pump.nu_hz},
                    {"phi_rad", sf.spec.pump.phi}};
    snap["init"] = {{"e0_re", sf.spec.init.envelope_e0.real()},
                    {"e0_im", sf.spec.init.envelope_e0.imag()},
                    {"g0_re", sf.spec.init.envelope_g0.real()},
                    {"g0_im", sf.spec.init.envelope_g0.imag()}};
    if (sf.spec.cavity) {
        const CavityConfig& cav = *sf.spec.cavity;
        snap["cavity"] = {{"omega_e_hz", cav.omega_e / two_pi},
                          {"omega_g_hz", cav.omega_g / two_pi},
                          {"c", cav.c},
                          {"chi", cav.chi},
                          {"x_r", cav.x_r},
                          {"a0", cav.a0},
                          {"nu_hz", cav.nu / two_pi},
                          {"phi_rad", cav.phi}};
    }
    snap["metric"] = j.value("metric", std::string("final_peak_magnitude"));
    snap["horizon_s"] = sf.spec.horizon_s;
    sf.snapshot = std::move(snap);
    return sf;
}

SweepSpecFile load_sweep_spec(const std::filesystem::path& path) {
    return parse_sweep_spec(load_json(path));
}

ordered_json gain_report_json(const GainReport& report) {
    ordered_json j;
    j["gain_rate_re"] = report.gain_rate.real();
    j["gain_rate_im"] = report.gain_rate.imag();
    j["regime"] = regime_to_string(report.regime);
    j["threshold_margin"] = number_or_string(report.threshold_margin);
    j["branch"] = branch_to_string(report.branch);
    return j;
}

void write_manifest(const std::filesystem::path& path, const std::string& command,
                    const ordered_json& config_snapshot,
                    const std::vector<std::string>& outputs, double wall_time_s) {
    ordered_json j;
    j["command"] = command;
    j["config"] = config_snapshot;
    j["tool_version"] = tool_version;
    j["wall_time_s"] = wall_time_s;
    j["outputs"] = outputs;
    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
    close_checked(out, path);
}

}  // namespace pwl::io
