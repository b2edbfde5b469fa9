#include "pwl/model.hpp"

#include <cmath>
#include <limits>

namespace pwl {

void validate(const SystemConfig& cfg) {
    if (!std::isfinite(cfg.omega_e_hz) || !std::isfinite(cfg.omega_g_hz)) {
        throw ConfigError("mode frequencies must be finite");
    }
    if (!(cfg.omega_e_hz > cfg.omega_g_hz) || !(cfg.omega_g_hz > 0.0)) {
        throw ConfigError("mode frequencies must satisfy omega_e > omega_g > 0");
    }
    if (!std::isfinite(cfg.chi_e) || !std::isfinite(cfg.chi_g)) {
        throw ConfigError("couplings must be finite");
    }
}

void validate(const PumpConfig& pump) {
    if (!std::isfinite(pump.amplitude_a0) || pump.amplitude_a0 < 0.0) {
        throw ConfigError("pump amplitude must be finite and >= 0");
    }
    if (!std::isfinite(pump.nu_hz) || !(pump.nu_hz > 0.0)) {
        throw ConfigError("pump frequency must be finite and > 0");
    }
    if (!std::isfinite(pump.phi)) {
        throw ConfigError("pump phase must be finite");
    }
}

void validate(const TimeSeries& ts) {
    if (!(ts.dt > 0.0) || !std::isfinite(ts.dt)) {
        throw ConfigError("time series requires dt > 0");
    }
    if (ts.samples_e.size() < 2 || ts.samples_e.size() != ts.samples_g.size()) {
        throw ConfigError("time series requires two equal-length channels of >= 2 samples");
    }
    if (!ts.deriv_e.empty() &&
        (ts.deriv_e.size() != ts.samples_e.size() || ts.deriv_g.size() != ts.samples_g.size())) {
        throw ConfigError("derivative channels must match sample length");
    }
}

Detunings derived_detunings(const SystemConfig& cfg, const PumpConfig& pump) {
    // Form the difference detuning in Hz first: when the pump sits exactly on
    // the splitting the Hz subtraction cancels exactly, giving delta == 0.
    const double delta_hz = pump.nu_hz - (cfg.omega_e_hz - cfg.omega_g_hz);
    Detunings d;
    d.delta = two_pi * delta_hz;
    // Define the sum detuning through the identity; 2*omega_g scales exactly.
    d.delta_s = d.delta - 2.0 * cfg.omega_g();
    return d;
}

int symmetry_relation(const SystemConfig& cfg) {
    // Compare signs of the factors rather than the product so denormal
    // couplings cannot underflow the answer to zero.
    if (cfg.chi_e == 0.0 || cfg.chi_g == 0.0) return 0;
    return ((cfg.chi_e > 0.0) == (cfg.chi_g > 0.0)) ? 1 : -1;
}

SystemConfig make_baseline_system(double sign_e, double sign_g) {
    SystemConfig cfg;
    cfg.omega_e_hz = baseline_omega_e_hz;
    cfg.omega_g_hz = baseline_omega_g_hz;
    cfg.chi_e = sign_e * baseline_chi_mag;
    cfg.chi_g = sign_g * baseline_chi_mag;
    return cfg;
}

PumpConfig make_baseline_pump(double nu_hz) {
    PumpConfig pump;
    pump.amplitude_a0 = 1.0;
    pump.nu_hz = nu_hz;
    pump.phi = 0.0;
    return pump;
}

}  // namespace pwl
