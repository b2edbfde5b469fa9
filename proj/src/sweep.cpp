#include "pwl/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <limits>
#include <thread>

#include "pwl/analytic.hpp"
#include "pwl/errors.hpp"
#include "pwl/integrator.hpp"
#include "pwl/spectral.hpp"

namespace pwl {

namespace {

constexpr double nan_d = std::numeric_limits<double>::quiet_NaN();

void check_axis(const SweepAxis& ax) {
    if (ax.count < 2) throw ConfigError("sweep: axis count must be >= 2");
    if (!(std::isfinite(ax.min) && std::isfinite(ax.max) && ax.min < ax.max))
        throw ConfigError("sweep: axis range must be finite with min < max");
}

double axis_value(const SweepAxis& ax, int i) {
    return ax.min + (ax.max - ax.min) * static_cast<double>(i) /
                        static_cast<double>(ax.count - 1);
}

struct CellInputs {
    SystemConfig system;
    PumpConfig pump;
};

CellInputs apply_axes(const SweepSpec& spec, double v1, double v2) {
    CellInputs in{spec.system, spec.pump};
    CavityConfig cav = spec.cavity.value_or(CavityConfig{});
    bool cav_dirty = false;
    auto apply = [&](SweepParameter p, double v) {
        switch (p) {
            case SweepParameter::NuHz: in.pump.nu_hz = v; break;
            case SweepParameter::ChiE: in.system.chi_e = v; break;
            case SweepParameter::ChiG: in.system.chi_g = v; break;
            case SweepParameter::XR:
                cav.x_r = v;
                cav_dirty = true;
                break;
        }
    };
    apply(spec.axis1.parameter, v1);
    if (spec.axis2) apply(spec.axis2->parameter, v2);
    if (cav_dirty) in.system = cavity_system(cav);
    return in;
}

// Peak |E_e| over the leading and trailing 10% of the stored samples.
std::pair<double, double> edge_peaks(const TimeSeries& ts) {
    const std::size_t n = ts.samples_e.size();
    const std::size_t k = std::max<std::size_t>(1, n / 10);
    double head = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < k; ++i) head = std::max(head, std::abs(ts.samples_e[i]));
    for (std::size_t i = n - k; i < n; ++i) tail = std::max(tail, std::abs(ts.samples_e[i]));
    return {head, tail};
}

void compute_cell(const SweepSpec& spec, SweepCell& cell) {
    const CellInputs in = apply_axes(spec, cell.axis1, cell.axis2);
    cell.sym_sign = symmetry_relation(in.system);
    cell.report = classify_regime(in.system, in.pump);

    if (spec.metric == SweepMetric::AnalyticReOmega) {
        cell.metric = cell.report.gain_rate.real();
        cell.growth_ratio = nan_d;
        return;
    }

    IntegratorSettings settings;
    settings.t_end = spec.horizon_s;
    const double f_max_hz = std::max(in.system.omega_e_hz, in.pump.nu_hz + in.system.omega_e_hz);
    const double n_steps = std::ceil(spec.horizon_s * 256.0 * f_max_hz);
    settings.sample_stride = std::max(1, static_cast<int>(n_steps / 65536.0));
    const TimeSeries ts = integrate_full(in.system, in.pump, spec.init, settings);

    const auto [head, tail] = edge_peaks(ts);
    cell.growth_ratio = tail / std::max(head, 1e-300);
    if (spec.metric == SweepMetric::FinalPeakMagnitude) {
        cell.metric = tail;
    } else {  // FittedGrowthRate
        cell.metric = fit_growth_rate(ts, Channel::E, in.system.omega_e_hz).rate;
    }
}

}  // namespace

std::vector<SweepCell> run_sweep(const SweepSpec& spec, int jobs) {
    check_axis(spec.axis1);
    if (spec.axis2) {
        check_axis(*spec.axis2);
        if (spec.axis2->parameter == spec.axis1.parameter)
            throw ConfigError("sweep: both axes vary the same parameter");
    }
    const bool needs_cavity =
        spec.axis1.parameter == SweepParameter::XR ||
        (spec.axis2 && spec.axis2->parameter == SweepParameter::XR);
    if (needs_cavity && !spec.cavity)
        throw ConfigError("sweep: an x_r axis requires the cavity description");
    if (spec.cavity) validate(*spec.cavity);
    validate(spec.system);
    if (!(std::isfinite(spec.horizon_s) && spec.horizon_s > 0.0))
        throw ConfigError("sweep: horizon must be positive and finite");
    // The pump is validated per cell: a swept nu axis may include invalid
    // points (e.g. nu = 0), which must surface as cell errors, not aborts.

    const int n1 = spec.axis1.count;
    const int n2 = spec.axis2 ? spec.axis2->count : 1;
    const std::size_t total = static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2);

    std::vector<SweepCell> cells(total);
    for (int i1 = 0; i1 < n1; ++i1) {
        for (int i2 = 0; i2 < n2; ++i2) {
            SweepCell& c = cells[static_cast<std::size_t>(i1) * n2 + i2];
            c.axis1 = axis_value(spec.axis1, i1);
            c.axis2 = spec.axis2 ? axis_value(*spec.axis2, i2) : nan_d;
        }
    }

    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(std::min<std::size_t>(workers, total), 256u);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            SweepCell& cell = cells[idx];
            try {
                compute_cell(spec, cell);
            } catch (const std::exception& e) {
                cell.error = true;
                cell.error_kind = e.what();
                cell.metric = nan_d;
                cell.growth_ratio = nan_d;
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return cells;
}

std::vector<SweepCell> regime_map(const SweepSpec& spec, int jobs) {
    SweepSpec analytic = spec;
    analytic.metric = SweepMetric::AnalyticReOmega;
    return run_sweep(analytic, jobs);
}

std::vector<SweepCell> sweep_antenna(const CavityConfig& cav, double x_lo, double x_hi,
                                     int count, CavityBranch branch, SweepMetric metric,
                                     double horizon_s, int jobs) {
    validate(cav);
    SweepSpec spec;
    spec.axis1 = {SweepParameter::XR, x_lo, x_hi, count};
    spec.cavity = cav;
    spec.system = cavity_system(cav);
    spec.pump.amplitude_a0 = cav.a0;
    spec.pump.phi = cav.phi;
    spec.pump.nu_hz = (branch == CavityBranch::SumPump ? cav.omega_e + cav.omega_g
                                                       : cav.omega_e - cav.omega_g) /
                      two_pi;
    spec.init = InitialConditions{};
    spec.metric = metric;
    spec.horizon_s = horizon_s;
    return run_sweep(spec, jobs);
}

}  // namespace pwl
