#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "pwl/model.hpp"

namespace pwl {

// Feedback-loop waveguide with a movable receiver antenna: the mixer output
// re-enters the line, so the antenna position x_r imprints cos(k x_r) factors
// on both effective couplings.  Frequencies are given in rad/s here; the wave
// speed is normalized (c = 1 by default), so k = omega/c and
// lambda = 2 pi c / omega.
struct CavityConfig {
    double omega_e = two_pi * baseline_omega_e_hz;  // rad/s
    double omega_g = two_pi * baseline_omega_g_hz;  // rad/s
    double c = 1.0;                                 // wave speed, m/s
    double chi = 1.0;                               // mixer efficiency, > 0
    double x_r = 0.0;                               // receiver position, m
    double a0 = 1.0;                                // pump amplitude
    double nu = 0.0;  // pump frequency, rad/s; 0 = "resonant per branch"
    double phi = 0.0;

    double k_e() const { return omega_e / c; }
    double k_g() const { return omega_g / c; }
    double lambda_e() const { return two_pi * c / omega_e; }
    double lambda_g() const { return two_pi * c / omega_g; }
};

void validate(const CavityConfig& cav);

// Which resonance the pump sits on: nu = omega_e + omega_g (SumPump) or
// nu = omega_e - omega_g (DiffPump).
enum class CavityBranch { SumPump, DiffPump };

// Position-dependent couplings (chi_e, chi_g) = chi * cos(k_{e,g} x_r).
std::pair<double, double> effective_coupling(const CavityConfig& cav);

// The equivalent two-mode system at the current antenna position; every
// other module applies unchanged to this.
SystemConfig cavity_system(const CavityConfig& cav);

// Resonant gain Omega_0 = sqrt(s * chi^2 cos(k_e x_r) cos(k_g x_r) A0^2 /
// (4 omega_e omega_g)) with s = +1 (SumPump) / -1 (DiffPump); principal root.
// Matches analytic::gain_rate on cavity_system at exact resonance.
std::complex<double> cavity_gain(const CavityConfig& cav, CavityBranch branch);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Negative-symmetry (chi_e * chi_g < 0) antenna regions.
//  - formula: the quarter-wavelength brackets ((2m+1) lambda_e / 4,
//    (2m+1) lambda_g / 4) for m = 0..m_max;
//  - exact: sign-derived intervals from node enumeration over
//    [0, (2 m_max + 1) lambda_g / 4]; for small m these contain the formula
//    brackets, for large m extra sign-change regions appear between them.
struct DpaWindows {
    std::vector<Interval> formula;
    std::vector<Interval> exact;
};

DpaWindows dpa_windows(const CavityConfig& cav, int m_max);

}  // namespace pwl
