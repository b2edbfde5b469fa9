#include "pwl/integrator.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "pwl/errors.hpp"

namespace pwl {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

using State4 = std::array<double, 4>;  // (E_e, dE_e/dt, E_g, dE_g/dt)

struct FullRhs {
    double we2, wg2, chi_e, chi_g, a0, nu, phi;

    State4 operator()(double t, const State4& y) const {
        const double ep = a0 * std::cos(nu * t + phi);
        return {y[1], -we2 * y[0] + chi_g * y[2] * ep,  //
                y[3], -wg2 * y[2] + chi_e * y[0] * ep};
    }
};

State4 axpy(const State4& y, double h, const State4& k) {
    return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

void check_settings(const IntegratorSettings& s) {
    if (!std::isfinite(s.t_end) || s.t_end <= 0.0)
        throw ConfigError("integrator: t_end must be positive and finite");
    if (s.sample_stride < 1) throw ConfigError("integrator: sample_stride must be >= 1");
    if (!std::isfinite(s.dt) || s.dt < 0.0)
        throw ConfigError("integrator: dt must be non-negative and finite");
}

bool finite(double x) { return std::isfinite(x); }
bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

TimeSeries integrate_full(const SystemConfig& cfg, const PumpConfig& pump,
                          const InitialConditions& init, const IntegratorSettings& settings) {
    validate(cfg);
    validate(pump);
    check_settings(settings);

    const double f_max_hz = std::max(cfg.omega_e_hz, pump.nu_hz + cfg.omega_e_hz);
    double dt = settings.dt > 0.0 ? settings.dt : 1.0 / (256.0 * f_max_hz);
    const double dt_cap = 1.0 / (200.0 * f_max_hz) * (1.0 + 1e-12);
    if (dt > dt_cap)
        throw StepTooLarge("integrate_full: dt exceeds 1/(200 f_max); refine the step");

    const auto n_steps = static_cast<std::size_t>(std::ceil(settings.t_end / dt - 1e-9));
    if (n_steps == 0) throw ConfigError("integrate_full: t_end shorter than one step");
    dt = settings.t_end / static_cast<double>(n_steps);

    const auto stride = static_cast<std::size_t>(settings.sample_stride);
    if (n_steps < stride)
        throw ConfigError("integrate_full: sample_stride leaves fewer than two samples");

    const FullRhs rhs{cfg.omega_e() * cfg.omega_e(),
                      cfg.omega_g() * cfg.omega_g(),
                      cfg.chi_e,
                      cfg.chi_g,
                      pump.amplitude_a0,
                      pump.nu(),
                      pump.phi};

    State4 y{init.envelope_e0.real(), cfg.omega_e() * init.envelope_e0.imag(),
             init.envelope_g0.real(), cfg.omega_g() * init.envelope_g0.imag()};

    TimeSeries ts;
    ts.dt = dt * static_cast<double>(stride);
    ts.t0 = 0.0;
    const std::size_t n_samples = n_steps / stride + 1;
    ts.samples_e.reserve(n_samples);
    ts.deriv_e.reserve(n_samples);
    ts.samples_g.reserve(n_samples);
    ts.deriv_g.reserve(n_samples);

    auto emit = [&](const State4& s) {
        if (!(finite(s[0]) && finite(s[1]) && finite(s[2]) && finite(s[3])))
            throw NonFinite("integrate_full: field sample is not finite");
        ts.samples_e.push_back(s[0]);
        ts.deriv_e.push_back(s[1]);
        ts.samples_g.push_back(s[2]);
        ts.deriv_g.push_back(s[3]);
    };

    emit(y);
    for (std::size_t i = 0; i < n_steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        const State4 k1 = rhs(t, y);
        const State4 k2 = rhs(t + 0.5 * dt, axpy(y, 0.5 * dt, k1));
        const State4 k3 = rhs(t + 0.5 * dt, axpy(y, 0.5 * dt, k2));
        const State4 k4 = rhs(t + dt, axpy(y, dt, k3));
        for (int c = 0; c < 4; ++c)
            y[c] += dt / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        if ((i + 1) % stride == 0) emit(y);
    }
    return ts;
}

namespace {

using EnvState = std::array<cplx, 2>;  // (env_e, env_g), carriers removed

struct EnvRhs {
    EnvelopeForm form;
    cplx p;          // pump phasor
    double ce4we;    // chi_g/(4 omega_e)
    double cg4wg;    // chi_e/(4 omega_g)
    double delta;    // rad/s
    double delta_s;  // rad/s

    EnvState operator()(double t, const EnvState& y) const {
        switch (form) {
            case EnvelopeForm::Detuned: {
                const cplx fast_d = std::exp(-I * (delta * t));
                const cplx fast_s = std::exp(-I * (delta_s * t));
                return {I * ce4we * (y[1] * p * fast_d + std::conj(y[1]) * p * fast_s),
                        I * cg4wg * (y[0] * std::conj(p) * std::conj(fast_d) +
                                     std::conj(y[0]) * p * fast_s)};
            }
            case EnvelopeForm::OPA: {
                const cplx fast_s = std::exp(-I * (delta_s * t));
                return {I * ce4we * p * std::conj(y[1]) * fast_s,
                        I * cg4wg * p * std::conj(y[0]) * fast_s};
            }
            case EnvelopeForm::DPA: {
                const cplx fast_d = std::exp(-I * (delta * t));
                return {I * ce4we * p * y[1] * fast_d,
                        I * cg4wg * std::conj(p) * y[0] * std::conj(fast_d)};
            }
        }
        throw ConfigError("integrate_envelope: unknown form");
    }
};

EnvState eadd(const EnvState& y, double h, const EnvState& k) {
    return {y[0] + h * k[0], y[1] + h * k[1]};
}

}  // namespace

ComplexSeries integrate_envelope(const SystemConfig& cfg, const PumpConfig& pump,
                                 const InitialConditions& init,
                                 const IntegratorSettings& settings, EnvelopeForm form) {
    validate(cfg);
    validate(pump);
    check_settings(settings);
    if (!(settings.rtol >= 1e-12 && settings.rtol <= 1e-6))
        throw ConfigError("integrate_envelope: rtol must lie in [1e-12, 1e-6]");
    if (!std::isfinite(settings.atol) || settings.atol <= 0.0)
        throw ConfigError("integrate_envelope: atol must be positive and finite");

    const Detunings det = derived_detunings(cfg, pump);
    const EnvRhs rhs{form,
                     pump.phasor(),
                     cfg.chi_g / (4.0 * cfg.omega_e()),
                     cfg.chi_e / (4.0 * cfg.omega_g()),
                     det.delta,
                     det.delta_s};

    double out_dt = settings.dt > 0.0 ? settings.dt : settings.t_end / 1024.0;
    const auto n_out = static_cast<std::size_t>(std::ceil(settings.t_end / out_dt - 1e-9));
    if (n_out == 0) throw ConfigError("integrate_envelope: t_end shorter than one output step");
    out_dt = settings.t_end / static_cast<double>(n_out);
    const auto stride = static_cast<std::size_t>(settings.sample_stride);
    if (n_out < stride)
        throw ConfigError("integrate_envelope: sample_stride leaves fewer than two samples");

    // Dormand-Prince 5(4) coefficients.
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                     e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                     e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    EnvState y{init.envelope_e0, init.envelope_g0};
    double t = 0.0;
    double h = out_dt / 8.0;
    EnvState k1 = rhs(t, y);  // FSAL slot; always valid at (t, y)

    ComplexSeries out;
    out.dt = out_dt * static_cast<double>(stride);
    out.t0 = 0.0;
    out.e.reserve(n_out / stride + 1);
    out.g.reserve(n_out / stride + 1);

    auto emit = [&](std::size_t k, const EnvState& s) {
        if (!(finite(s[0]) && finite(s[1])))
            throw NonFinite("integrate_envelope: envelope sample is not finite");
        const double tk = static_cast<double>(k) * out_dt;
        out.e.push_back(s[0] * std::exp(-I * (cfg.omega_e() * tk)));
        out.g.push_back(s[1] * std::exp(-I * (cfg.omega_g() * tk)));
    };

    emit(0, y);
    std::size_t evals = 0;
    constexpr std::size_t max_evals = 200'000'000;

    for (std::size_t k = 1; k <= n_out; ++k) {
        const double t_target = static_cast<double>(k) * out_dt;
        while (t < t_target) {
            const bool capped = h >= t_target - t;
            const double hs = capped ? t_target - t : h;
            const EnvState k2 = rhs(t + c2 * hs, eadd(y, hs * a21, k1));
            EnvState yt = {y[0] + hs * (a31 * k1[0] + a32 * k2[0]),
                           y[1] + hs * (a31 * k1[1] + a32 * k2[1])};
            const EnvState k3 = rhs(t + c3 * hs, yt);
            yt = {y[0] + hs * (a41 * k1[0] + a42 * k2[0] + a43 * k3[0]),
                  y[1] + hs * (a41 * k1[1] + a42 * k2[1] + a43 * k3[1])};
            const EnvState k4 = rhs(t + c4 * hs, yt);
            yt = {y[0] + hs * (a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0]),
                  y[1] + hs * (a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1])};
            const EnvState k5 = rhs(t + c5 * hs, yt);
            yt = {y[0] + hs * (a61 * k1[0] + a62 * k2[0] + a63 * k3[0] + a64 * k4[0] +
                               a65 * k5[0]),
                  y[1] + hs * (a61 * k1[1] + a62 * k2[1] + a63 * k3[1] + a64 * k4[1] +
                               a65 * k5[1])};
            const EnvState k6 = rhs(t + hs, yt);
            const EnvState y_new = {
                y[0] + hs * (b1 * k1[0] + b3 * k3[0] + b4 * k4[0] + b5 * k5[0] + b6 * k6[0]),
                y[1] + hs * (b1 * k1[1] + b3 * k3[1] + b4 * k4[1] + b5 * k5[1] + b6 * k6[1])};
            const EnvState k7 = rhs(t + hs, y_new);

            double err2 = 0.0;
            for (int c = 0; c < 2; ++c) {
                const cplx ec = hs * (e1 * k1[c] + e3 * k3[c] + e4 * k4[c] + e5 * k5[c] +
                                      e6 * k6[c] + e7 * k7[c]);
                const double sc = settings.atol +
                                  settings.rtol * std::max(std::abs(y[c]), std::abs(y_new[c]));
                const double r = std::abs(ec) / sc;
                err2 += r * r;
            }
            const double err = std::sqrt(err2 / 2.0);
            if (!std::isfinite(err)) throw NonFinite("integrate_envelope: step error diverged");

            const double factor =
                err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
            if (err <= 1.0) {
                y = y_new;
                k1 = k7;
                if (capped) {
                    t = t_target;  // keep h: the sliver step says nothing about scale
                } else {
                    t += hs;
                    h = hs * factor;
                }
            } else {
                h = hs * factor;  // rejected: t, y, k1 all unchanged
            }
            if (h < 1e-15 * settings.t_end)
                throw NumericError("integrate_envelope: step size underflow");
            evals += 6;
            if (evals > max_evals)
                throw NumericError("integrate_envelope: step budget exhausted");
        }
        if (k % stride == 0) emit(k, y);
    }
    return out;
}

EnergyFlowSeries energy_flow_numeric(const TimeSeries& ts, const SystemConfig& cfg,
                                     const PumpConfig& pump) {
    validate(ts);
    validate(cfg);
    validate(pump);
    if (ts.deriv_e.size() != ts.samples_e.size() || ts.deriv_g.size() != ts.samples_g.size())
        throw ConfigError("energy_flow_numeric: series lacks derivative channels");

    const std::size_t n = ts.samples_e.size();
    EnergyFlowSeries fs;
    fs.dt = ts.dt;
    fs.t0 = ts.t0;
    fs.flow_e.resize(n);
    fs.flow_g.resize(n);
    fs.cumulative_e.resize(n);
    fs.cumulative_g.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        const double t = ts.t0 + static_cast<double>(i) * ts.dt;
        const double ep = pump.amplitude_a0 * std::cos(pump.nu() * t + pump.phi);
        fs.flow_e[i] = ts.deriv_e[i] * cfg.chi_g * ts.samples_g[i] * ep;
        fs.flow_g[i] = ts.deriv_g[i] * cfg.chi_e * ts.samples_e[i] * ep;
    }
    fs.cumulative_e[0] = 0.0;
    fs.cumulative_g[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        fs.cumulative_e[i] =
            fs.cumulative_e[i - 1] + 0.5 * ts.dt * (fs.flow_e[i - 1] + fs.flow_e[i]);
        fs.cumulative_g[i] =
            fs.cumulative_g[i - 1] + 0.5 * ts.dt * (fs.flow_g[i - 1] + fs.flow_g[i]);
    }
    return fs;
}

}  // namespace pwl
