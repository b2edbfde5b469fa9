#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "pwl/errors.hpp"

namespace pwl {

inline constexpr double two_pi = 6.283185307179586476925286766559;

inline double hz_to_rad(double hz) { return two_pi * hz; }
inline double rad_to_hz(double rad) { return rad / two_pi; }

// Two coupled target modes and their nonlinear coupling parameters.
// Frequencies are configured in Hz (the external unit everywhere); the
// omega_e()/omega_g() accessors give angular frequency in rad/s, which is
// the unit of every formula in the library.  Keeping Hz as the stored value
// lets detunings be formed in Hz arithmetic, so that e.g. pumping exactly at
// the mode splitting yields a detuning of exactly zero.
struct SystemConfig {
    double omega_e_hz = 0.0;  // upper mode frequency, Hz
    double omega_g_hz = 0.0;  // lower mode frequency, Hz
    double chi_e = 0.0;       // coupling in the g-mode equation, rad^2/s^2 per field unit
    double chi_g = 0.0;       // coupling in the e-mode equation, rad^2/s^2 per field unit

    double omega_e() const { return two_pi * omega_e_hz; }  // rad/s
    double omega_g() const { return two_pi * omega_g_hz; }  // rad/s
};

// Harmonic pump E_p(t) = A0 cos(nu t + phi).
struct PumpConfig {
    double amplitude_a0 = 0.0;  // field units, >= 0
    double nu_hz = 0.0;         // pump frequency, Hz (> 0)
    double phi = 0.0;           // pump phase, rad

    double nu() const { return two_pi * nu_hz; }  // rad/s
    // Complex pump amplitude A0 e^{-i phi}.
    std::complex<double> phasor() const {
        return amplitude_a0 * std::complex<double>(std::cos(phi), -std::sin(phi));
    }
};

// Complex envelope amplitudes at t = 0.  Real initial fields follow as
// E(0) = Re(env), dE/dt(0) = Re(-i omega env).
struct InitialConditions {
    std::complex<double> envelope_e0{1.0, 0.0};
    std::complex<double> envelope_g0{0.0, 0.0};
};

// Pump detunings from the difference and sum of the mode frequencies,
// delta   = nu - (omega_e - omega_g)
// delta_s = nu - (omega_e + omega_g),
// which obey delta - delta_s = 2 omega_g.
struct Detunings {
    double delta = 0.0;    // rad/s
    double delta_s = 0.0;  // rad/s
};

// Uniformly sampled real fields, optionally with their time derivatives.
struct TimeSeries {
    double dt = 0.0;  // sample spacing, s
    double t0 = 0.0;  // time of first sample, s
    std::vector<double> samples_e;
    std::vector<double> samples_g;
    std::vector<double> deriv_e;  // dE_e/dt, may be empty
    std::vector<double> deriv_g;  // dE_g/dt, may be empty
};

// Complex amplitude trajectories (carrier phase included).
struct ComplexSeries {
    double dt = 0.0;
    double t0 = 0.0;
    std::vector<std::complex<double>> e;
    std::vector<std::complex<double>> g;
};

enum class Branch { OPA, DPA };

enum class Regime { Amplify, Exchange, BelowThreshold, OffResonant };

// Outcome of regime classification: the dominant-branch complex gain rate,
// the qualitative regime, and the pump amplitude relative to threshold.
// regime == Amplify holds exactly when gain_rate has a positive real part.
struct GainReport {
    std::complex<double> gain_rate{0.0, 0.0};  // rad/s
    Regime regime = Regime::OffResonant;
    double threshold_margin = 0.0;  // A0 / A_threshold; +inf at zero detuning
    Branch branch = Branch::DPA;    // branch the report refers to
};

// Throw ConfigError if the mode/coupling bundle violates its invariants:
// omega_e > omega_g > 0, couplings finite.
void validate(const SystemConfig& cfg);

// Throw ConfigError unless A0 >= 0, nu > 0, phi finite.
void validate(const PumpConfig& pump);

// Throw ConfigError if the series is non-uniform in shape: fewer than two
// samples, mismatched channel lengths, or dt <= 0.
void validate(const TimeSeries& ts);

// Pump detunings.  delta is formed from the Hz values so that resonant
// configurations produce an exact zero; delta_s is then derived through the
// identity delta_s = delta - 2 omega_g, which therefore holds exactly.
Detunings derived_detunings(const SystemConfig& cfg, const PumpConfig& pump);

// Sign of the coupling product chi_e * chi_g: +1, -1, or 0 when either
// coupling is exactly zero.
int symmetry_relation(const SystemConfig& cfg);

// Default acoustic-scale demonstration parameters: mode splitting 220 Hz,
// coupling magnitude chosen so the resonant gain rate is ~2*pi*10 rad/s at
// unit pump amplitude.
inline constexpr double baseline_omega_e_hz = 1460.0;
inline constexpr double baseline_omega_g_hz = 1240.0;
inline constexpr double baseline_chi_mag = 1.0625e6;

// Baseline mode pair with couplings sign_e*|chi| and sign_g*|chi|.
SystemConfig make_baseline_system(double sign_e, double sign_g);

// Unit-amplitude, zero-phase pump at nu_hz.
PumpConfig make_baseline_pump(double nu_hz);

}  // namespace pwl
