#pragma once

#include "pwl/analytic.hpp"
#include "pwl/model.hpp"

namespace pwl {

// Settings shared by the two integration modes.  dt is the fixed step of the
// full second-order simulation (0 selects the default of 256 steps per cycle
// of the fastest frequency); rtol/atol drive the adaptive envelope stepper;
// sample_stride decimates the stored output without touching the step size.
struct IntegratorSettings {
    double dt = 0.0;       // s; full mode step (0 -> default)
    double rtol = 1e-10;   // envelope mode, must lie in [1e-12, 1e-6]
    double atol = 1e-12;   // envelope mode absolute floor
    double t_end = 0.0;    // s
    int sample_stride = 1;
};

// Which reduced first-order system integrate_envelope solves: the detuned
// two-term system (both slow phases kept), or one of the single-branch forms.
enum class EnvelopeForm { Detuned, OPA, DPA };

// Fixed-step 4th-order integration of the full coupled second-order system
//   d2E_e/dt2 = -omega_e^2 E_e + chi_g E_g E_p(t)
//   d2E_g/dt2 = -omega_g^2 E_g + chi_e E_e E_p(t)
// with E_p = A0 cos(nu t + phi).  Initial fields derive from the complex
// envelopes as E(0) = Re(env), dE/dt(0) = Re(-i omega env).  Throws
// StepTooLarge when dt exceeds 1/(200 f_max) with
// f_max = max(omega_e, nu + omega_e)/(2 pi), and NonFinite if any recorded
// sample overflows.  The returned series carries both fields and their
// derivatives.
TimeSeries integrate_full(const SystemConfig& cfg, const PumpConfig& pump,
                          const InitialConditions& init, const IntegratorSettings& settings);

// Adaptive embedded 5(4) integration of the rotating-frame envelope system
// selected by `form`.  Output samples are full complex amplitudes (carrier
// e^{-i omega t} included) on a uniform grid: settings.dt > 0 sets the output
// spacing, otherwise t_end/1024 is used; sample_stride decimates as in
// integrate_full.
ComplexSeries integrate_envelope(const SystemConfig& cfg, const PumpConfig& pump,
                                 const InitialConditions& init,
                                 const IntegratorSettings& settings, EnvelopeForm form);

// Instantaneous energy flows evaluated per sample from a full-simulation
// series (derivative channels required):
//   dW_e/dt = (dE_e/dt) chi_g E_g E_p,   dW_g/dt = (dE_g/dt) chi_e E_e E_p,
// plus cumulative energies by trapezoidal integration.
struct EnergyFlowSeries {
    double dt = 0.0;
    double t0 = 0.0;
    std::vector<double> flow_e;
    std::vector<double> flow_g;
    std::vector<double> cumulative_e;
    std::vector<double> cumulative_g;
};

EnergyFlowSeries energy_flow_numeric(const TimeSeries& ts, const SystemConfig& cfg,
                                     const PumpConfig& pump);

}  // namespace pwl
