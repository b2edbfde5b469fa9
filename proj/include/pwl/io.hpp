#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "pwl/analytic.hpp"
#include "pwl/cavity.hpp"
#include "pwl/integrator.hpp"
#include "pwl/model.hpp"
#include "pwl/quantum.hpp"
#include "pwl/spectral.hpp"
#include "pwl/sweep.hpp"

namespace pwl::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// All numeric output uses "%.17g": shortest round-trippable decimal form for
// diff-able golden files.
std::string format_g17(double x);

std::string regime_to_string(Regime r);
std::string branch_to_string(Branch b);

// ---- CSV writers (LF newlines, no timestamps) ------------------------------

// Full-simulation series: t,e,g,de,dg.
void write_timeseries_csv(const std::filesystem::path& path, const TimeSeries& ts);

// Complex series: t,re_e,im_e,re_g,im_g.
void write_complex_csv(const std::filesystem::path& path, const ComplexSeries& cs);

// Complex series with magnitudes: t,re_e,im_e,abs_e,re_g,im_g,abs_g.
void write_envelope_csv(const std::filesystem::path& path, const ComplexSeries& cs);

// Spectrum: freq_hz,magnitude.
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s);

// Energy flows with closed-form reference: t,flow_e,flow_g,flow_e_closed,flow_g_closed.
void write_flow_csv(const std::filesystem::path& path, const EnergyFlowSeries& fs,
                    const std::vector<double>& flow_e_closed,
                    const std::vector<double>& flow_g_closed);

// Sweep grid: <axis1_label>,<axis2_label>,metric,regime.  axis1 values are
// multiplied by axis1_scale (used to report antenna positions in units of
// lambda_g); error cells carry regime label "error".
void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepCell>& cells,
                     const std::string& axis1_label, const std::string& axis2_label,
                     double axis1_scale = 1.0);

// Quantum trajectory: t,re_ae,im_ae,re_ag,im_ag,re_H,im_H,norm.
void write_quantum_csv(const std::filesystem::path& path, const QuantumRun& run);

// ---- JSON ------------------------------------------------------------------

// Config schema (all keys optional; defaults are the acoustic baseline):
// { "omega_e_hz": .., "omega_g_hz": .., "chi_e": .., "chi_g": ..,
//   "pump": {"a0": .., "nu_hz": .., "phi_rad": ..},
//   "init": {"e0_re": .., "e0_im": .., "g0_re": .., "g0_im": ..},
//   "quantum": {"alpha_e_re": .., "alpha_e_im": .., "alpha_g_re": ..,
//               "alpha_g_im": .., "branch": "diff"|"sum", "t_end": .., "dt": ..} }
struct RunConfig {
    SystemConfig system;
    PumpConfig pump;
    InitialConditions init;
    json quantum;  // raw block (may be null)
    ordered_json snapshot;
};

RunConfig parse_run_config(const json& j);
RunConfig load_run_config(const std::filesystem::path& path);

// Sweep spec schema:
// { "axis1": {"parameter": "nu_hz"|"chi_e"|"chi_g"|"x_r", "min": .., "max": ..,
//             "count": ..},
//   "axis2": {...},                      (optional)
//   "system": {...}, "pump": {...}, "init": {...},          (optional)
//   "cavity": {"omega_e_hz": .., "omega_g_hz": .., "c": .., "chi": ..,
//              "a0": .., "phi_rad": ..},                    (optional)
//   "metric": "final_peak_magnitude"|"fitted_growth_rate"|"analytic_re_omega",
//   "horizon_s": .. }
struct SweepSpecFile {
    SweepSpec spec;
    ordered_json snapshot;
};

SweepSpecFile parse_sweep_spec(const json& j);
SweepSpecFile load_sweep_spec(const std::filesystem::path& path);

std::string sweep_parameter_name(SweepParameter p);

ordered_json gain_report_json(const GainReport& report);

// Manifest: {"command", "config", "tool_version", "wall_time_s", "outputs"}.
// Must be written after every listed output exists.
void write_manifest(const std::filesystem::path& path, const std::string& command,
                    const ordered_json& config_snapshot,
                    const std::vector<std::string>& outputs, double wall_time_s);

inline constexpr const char* tool_version = "0.1.0";

}  // namespace pwl::io
