#include "pwl/analytic.hpp"

#include <cmath>
#include <limits>

namespace pwl {

// Nonnegative -> real root, negative -> +i sqrt(-r).  This realizes the
// convention Re >= 0 with Im >= 0 on the Re = 0 boundary without relying on
// complex-libm branches.
cplx root_of_real(double radicand) {
    if (radicand >= 0.0) return {std::sqrt(radicand), 0.0};
    return {0.0, std::sqrt(-radicand)};
}

namespace {

constexpr cplx I{0.0, 1.0};

// sinh(z)/z, analytic at z = 0.
cplx sinhc(cplx z) {
    if (std::abs(z) < 1e-4) {
        const cplx z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

// sin(x)/x, analytic at x = 0 (real flows only need the real version).
double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double sinhc_real(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sinh(x) / x;
}

cplx carrier(double omega, double t) {
    // e^{-i omega t}
    return {std::cos(omega * t), -std::sin(omega * t)};
}

}  // namespace

ClosedFormSolution closed_form(const SystemConfig& cfg, const PumpConfig& pump, Branch branch) {
    validate(cfg);
    validate(pump);
    const Detunings d = derived_detunings(cfg, pump);
    const cplx p = pump.phasor();
    const double a0sq = pump.amplitude_a0 * pump.amplitude_a0;
    const double denom = 16.0 * cfg.omega_e() * cfg.omega_g();

    ClosedFormSolution s;
    s.branch = branch;
    if (branch == Branch::DPA) {
        s.detuning = d.delta;
        s.alpha = I * cfg.chi_g * p / (4.0 * cfg.omega_e());
        s.beta = I * cfg.chi_e * std::conj(p) / (4.0 * cfg.omega_g());
        // 4 alpha beta = -chi_e chi_g A0^2 / (4 omega_e omega_g), real.
        const double four_ab = -4.0 * cfg.chi_e * cfg.chi_g * a0sq / denom;
        s.gain_rate = root_of_real(-d.delta * d.delta + four_ab);
    } else {
        s.detuning = d.delta_s;
        s.alpha = I * cfg.chi_g * p / (4.0 * cfg.omega_e());
        s.beta = I * cfg.chi_e * p / (4.0 * cfg.omega_g());
        // 4 alpha_s conj(beta_s) = +chi_e chi_g A0^2 / (4 omega_e omega_g).
        const double four_ab = 4.0 * cfg.chi_e * cfg.chi_g * a0sq / denom;
        s.gain_rate = root_of_real(-d.delta_s * d.delta_s + four_ab);
    }
    s.a = s.gain_rate.real();
    s.b = s.gain_rate.imag();
    return s;
}

cplx gain_rate(const SystemConfig& cfg, const PumpConfig& pump, Branch branch) {
    return closed_form(cfg, pump, branch).gain_rate;
}

double pump_threshold(const SystemConfig& cfg, double nu_hz, Branch branch) {
    validate(cfg);
    if (cfg.chi_e * cfg.chi_g == 0.0) {
        throw ZeroCoupling("pump threshold undefined for chi_e*chi_g == 0");
    }
    PumpConfig probe = make_baseline_pump(nu_hz);
    const Detunings d = derived_detunings(cfg, probe);
    const double det = (branch == Branch::DPA) ? d.delta : d.delta_s;
    return 4.0 * std::abs(det) *
           std::sqrt(cfg.omega_e() * cfg.omega_g() / std::abs(cfg.chi_e * cfg.chi_g));
}

GainReport classify_regime(const SystemConfig& cfg, const PumpConfig& pump) {
    validate(cfg);
    validate(pump);
    const Detunings d = derived_detunings(cfg, pump);
    const Branch branch =
        (std::abs(d.delta) <= std::abs(d.delta_s)) ? Branch::DPA : Branch::OPA;
    const double det = (branch == Branch::DPA) ? d.delta : d.delta_s;

    ClosedFormSolution s = closed_form(cfg, pump, branch);
    GainReport report;
    report.branch = branch;
    report.gain_rate = s.gain_rate;

    const int sign = symmetry_relation(cfg);
    if (sign == 0) {
        report.threshold_margin = 0.0;
        report.regime = Regime::OffResonant;
        return report;
    }

    if (det == 0.0) {
        report.threshold_margin = std::numeric_limits<double>::infinity();
    } else {
        report.threshold_margin = pump.amplitude_a0 / pump_threshold(cfg, pump.nu_hz, branch);
    }

    const bool sign_ok = (branch == Branch::DPA) ? (sign < 0) : (sign > 0);
    if (s.gain_rate.real() > 0.0) {
        report.regime = Regime::Amplify;
    } else if (sign_ok) {
        report.regime = Regime::BelowThreshold;
    } else {
        // Wrong symmetry sign: strong near-resonant pumping still moves
        // energy back and forth.  "Strong" means the flipped sign would
        // amplify, i.e. 4|alpha beta| exceeds the squared detuning.
        const double four_ab_mag = std::abs(cfg.chi_e * cfg.chi_g) *
                                   pump.amplitude_a0 * pump.amplitude_a0 /
                                   (4.0 * cfg.omega_e() * cfg.omega_g());
        report.regime = (four_ab_mag > det * det) ? Regime::Exchange : Regime::OffResonant;
    }
    return report;
}

std::pair<cplx, cplx> dpa_envelopes(cplx alpha, cplx beta, double delta,
                                    cplx u0, cplx v0, double t) {
    const cplx omega = std::sqrt(cplx(-delta * delta, 0.0) + 4.0 * alpha * beta);
    const cplx arg = omega * (0.5 * t);
    const cplx ch = std::cosh(arg);
    const cplx sc = sinhc(arg);  // sinh(arg)/arg; (t/2)*sc = sinh(arg)/omega
    const cplx half_t = cplx(0.5 * t, 0.0);
    const cplx env_e = u0 * ch + (I * delta * u0 + 2.0 * alpha * v0) * half_t * sc;
    const cplx env_g = v0 * ch + (-I * delta * v0 + 2.0 * beta * u0) * half_t * sc;
    const cplx slow = carrier(0.5 * delta, t);  // e^{-i delta t / 2}
    return {env_e * slow, env_g * std::conj(slow)};
}

std::pair<cplx, cplx> opa_envelopes(cplx alpha_s, cplx beta_s, double delta_s,
                                    cplx u0, cplx v0, double t) {
    const cplx omega = std::sqrt(cplx(-delta_s * delta_s, 0.0) + 4.0 * alpha_s * std::conj(beta_s));
    const cplx half_t = cplx(0.5 * t, 0.0);
    const cplx arg_e = omega * (0.5 * t);
    const cplx arg_g = std::conj(omega) * (0.5 * t);
    const cplx env_e =
        u0 * std::cosh(arg_e) + (I * delta_s * u0 + 2.0 * alpha_s * std::conj(v0)) * half_t * sinhc(arg_e);
    const cplx env_g =
        v0 * std::cosh(arg_g) + (I * delta_s * v0 + 2.0 * beta_s * std::conj(u0)) * half_t * sinhc(arg_g);
    const cplx slow = carrier(0.5 * delta_s, t);  // e^{-i delta_s t / 2} on both modes
    return {env_e * slow, env_g * slow};
}

std::pair<cplx, cplx> solve_opa(const SystemConfig& cfg, const PumpConfig& pump,
                                const InitialConditions& init, double t) {
    const ClosedFormSolution s = closed_form(cfg, pump, Branch::OPA);
    auto [env_e, env_g] =
        opa_envelopes(s.alpha, s.beta, s.detuning, init.envelope_e0, init.envelope_g0, t);
    return {env_e * carrier(cfg.omega_e(), t), env_g * carrier(cfg.omega_g(), t)};
}

std::pair<cplx, cplx> solve_dpa(const SystemConfig& cfg, const PumpConfig& pump,
                                const InitialConditions& init, double t) {
    const ClosedFormSolution s = closed_form(cfg, pump, Branch::DPA);
    auto [env_e, env_g] =
        dpa_envelopes(s.alpha, s.beta, s.detuning, init.envelope_e0, init.envelope_g0, t);
    return {env_e * carrier(cfg.omega_e(), t), env_g * carrier(cfg.omega_g(), t)};
}

std::pair<double, double> energy_flow_closed_form(const SystemConfig& cfg,
                                                  const PumpConfig& pump,
                                                  double q_e0, double t,
                                                  FlowScenario scenario) {
    validate(cfg);
    validate(pump);
    const int sign = symmetry_relation(cfg);
    const bool diff_pump =
        (scenario == FlowScenario::ExchangeDiffPump || scenario == FlowScenario::AmplifyDiffPump);
    const bool amplify =
        (scenario == FlowScenario::AmplifyDiffPump || scenario == FlowScenario::AmplifySumPump);
    // Difference pump amplifies on negative products, exchanges on positive;
    // the sum pump mirrors that.
    const int required_sign = amplify == diff_pump ? -1 : 1;
    if (sign != required_sign) {
        throw InvalidScenario("coupling-product sign contradicts the requested flow scenario");
    }

    const double we = cfg.omega_e();
    const double wg = cfg.omega_g();
    const double a0 = pump.amplitude_a0;
    // Resonant rate magnitude: |Omega| = A0 sqrt|chi_e chi_g| / (2 sqrt(we wg)).
    const double r = a0 * std::sqrt(std::abs(cfg.chi_e * cfg.chi_g)) / (2.0 * std::sqrt(we * wg));
    // S(r t)/r written as t * S(rt)/(rt) so the r -> 0 limit stays finite.
    const double s_over_r = t * (amplify ? sinhc_real(r * t) : sinc(r * t));
    const double pump_freq = diff_pump ? (we - wg) : (we + wg);
    const double common = a0 * a0 * q_e0 * q_e0 * 0.25 * s_over_r * std::cos(pump_freq * t);
    const double flow_e =
        -cfg.chi_e * cfg.chi_g * (we / wg) * common * std::sin(we * t) * std::sin(wg * t);
    const double flow_g = cfg.chi_e * cfg.chi_e * common * std::cos(we * t) * std::cos(wg * t);
    return {flow_e, flow_g};
}

double conserved_diff_pump(const SystemConfig& cfg, cplx env_e, cplx env_g) {
    if (cfg.chi_e == 0.0 || cfg.chi_g == 0.0) {
        throw ZeroCoupling("conserved quantity undefined for zero coupling");
    }
    return (cfg.omega_e() / cfg.chi_g) * std::norm(env_e) +
           (cfg.omega_g() / cfg.chi_e) * std::norm(env_g);
}

double conserved_sum_pump(const SystemConfig& cfg, cplx env_e, cplx env_g) {
    if (cfg.chi_e == 0.0 || cfg.chi_g == 0.0) {
        throw ZeroCoupling("conserved quantity undefined for zero coupling");
    }
    return (cfg.omega_e() / cfg.chi_g) * std::norm(env_e) -
           (cfg.omega_g() / cfg.chi_e) * std::norm(env_g);
}

}  // namespace pwl
