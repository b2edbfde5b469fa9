#pragma once

#include <complex>
#include <utility>

#include "pwl/model.hpp"

namespace pwl {

using cplx = std::complex<double>;

// Principal square root of a real radicand: r >= 0 -> (sqrt(r), 0),
// r < 0 -> (0, sqrt(-r)).  Keeps rate radicands exactly on an axis instead of
// picking up rounding dust from a complex sqrt.
cplx root_of_real(double r);

// Gain parameters and gain rate of one branch of the rotating-wave envelope
// system.  With pump phasor P = A0 e^{-i phi}:
//   sum branch  (OPA): alpha_s = i chi_g P / (4 omega_e),
//                      beta_s  = i chi_e P / (4 omega_g),
//                      Omega_s^2 = -delta_s^2 + 4 alpha_s conj(beta_s)
//   diff branch (DPA): alpha = i chi_g P / (4 omega_e),
//                      beta  = i chi_e conj(P) / (4 omega_g),
//                      Omega^2 = -delta^2 + 4 alpha beta
struct ClosedFormSolution {
    Branch branch = Branch::DPA;
    cplx gain_rate{0.0, 0.0};  // Omega or Omega_s, rad/s
    double a = 0.0;            // Re(gain_rate)
    double b = 0.0;            // Im(gain_rate)
    cplx alpha{0.0, 0.0};
    cplx beta{0.0, 0.0};
    double detuning = 0.0;     // the branch's own detuning, rad/s
};

// Gain parameters, gain rate, and detuning for the requested branch.
ClosedFormSolution closed_form(const SystemConfig& cfg, const PumpConfig& pump, Branch branch);

// Complex gain rate of the requested branch, principal root convention:
// Re >= 0, and Im >= 0 when the real part vanishes.
cplx gain_rate(const SystemConfig& cfg, const PumpConfig& pump, Branch branch);

// Pump amplitude 4|detuning| sqrt(omega_e omega_g / |chi_e chi_g|) quoted for
// the onset of amplification on the given branch at pump frequency nu_hz.
// Throws ZeroCoupling when chi_e*chi_g == 0.
double pump_threshold(const SystemConfig& cfg, double nu_hz, Branch branch);

// Classify the dominant branch (smaller |detuning|; tie goes to the
// difference branch).  Amplify iff Re(gain) > 0 there; Exchange when the
// coupling-product sign is wrong for the branch but strong enough that the
// flipped sign would amplify; BelowThreshold when the sign is right but the
// pump cannot push the gain real; OffResonant otherwise.
GainReport classify_regime(const SystemConfig& cfg, const PumpConfig& pump);

// Rotating-frame envelope solutions from raw gain parameters, initial
// envelopes u0 (upper mode) and v0 (lower mode), evaluated at time t.
// The slow phase factors e^{-i delta t/2} (and e^{+i delta t/2} on the lower
// mode of the difference branch) are included; the fast carrier e^{-i omega t}
// is not.  The degenerate gain-rate limit |Omega| -> 0 is evaluated through
// the analytic limit sinh(x)/x -> 1, so no division by zero occurs.
std::pair<cplx, cplx> dpa_envelopes(cplx alpha, cplx beta, double delta,
                                    cplx u0, cplx v0, double t);
std::pair<cplx, cplx> opa_envelopes(cplx alpha_s, cplx beta_s, double delta_s,
                                    cplx u0, cplx v0, double t);

// Full complex amplitudes of the sum-branch closed form at time t >= 0,
// carrier factors e^{-i(omega + delta_s/2) t} included.  Real fields follow
// as E = Re(result).
std::pair<cplx, cplx> solve_opa(const SystemConfig& cfg, const PumpConfig& pump,
                                const InitialConditions& init, double t);

// Difference-branch counterpart; carriers e^{-i(omega_e + delta/2) t} and
// e^{-i(omega_g - delta/2) t}.
std::pair<cplx, cplx> solve_dpa(const SystemConfig& cfg, const PumpConfig& pump,
                                const InitialConditions& init, double t);

// The four resonant energy-flow scenarios with initial envelope (q_e0, 0)
// and a zero-phase pump.
enum class FlowScenario {
    ExchangeDiffPump,   // chi_e chi_g > 0, pump on the difference frequency
    AmplifyDiffPump,    // chi_e chi_g < 0, pump on the difference frequency
    ExchangeSumPump,    // chi_e chi_g < 0, pump on the sum frequency
    AmplifySumPump,     // chi_e chi_g > 0, pump on the sum frequency
};

// Slow-varying closed forms of the instantaneous energy flows
// (dW_e/dt, dW_g/dt) at time t for the given scenario.  Throws
// InvalidScenario when the configured coupling signs contradict it.
std::pair<double, double> energy_flow_closed_form(const SystemConfig& cfg,
                                                  const PumpConfig& pump,
                                                  double q_e0, double t,
                                                  FlowScenario scenario);

// Weighted envelope quadratics conserved by the single-branch envelope
// systems: the difference branch conserves
//   (omega_e/chi_g)|E_e|^2 + (omega_g/chi_e)|E_g|^2,
// the sum branch
//   (omega_e/chi_g)|E_e|^2 - (omega_g/chi_e)|E_g|^2.
// Both couplings must be nonzero (ZeroCoupling otherwise).
double conserved_diff_pump(const SystemConfig& cfg, cplx env_e, cplx env_g);
double conserved_sum_pump(const SystemConfig& cfg, cplx env_e, cplx env_g);

}  // namespace pwl
