#include "pwl/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>

#include "pwl/errors.hpp"

namespace pwl {

namespace {

// FFTW plan creation/destruction is not thread-safe; execution on distinct
// plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

const std::vector<double>& pick(const TimeSeries& ts, Channel channel) {
    return channel == Channel::E ? ts.samples_e : ts.samples_g;
}

}  // namespace

Spectrum fft_spectrum(const TimeSeries& ts, Channel channel, Window window) {
    validate(ts);
    const std::vector<double>& x = pick(ts, channel);
    const std::size_t n = x.size();
    if (n < 1024) throw TooShort("fft_spectrum: need at least 1024 samples");

    double* in = fftw_alloc_real(n);
    fftw_complex* out = fftw_alloc_complex(n / 2 + 1);
    if (in == nullptr || out == nullptr) {
        fftw_free(in);
        fftw_free(out);
        throw NumericError("fft_spectrum: allocation failed");
    }

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
    }
    if (plan == nullptr) {
        fftw_free(in);
        fftw_free(out);
        throw NumericError("fft_spectrum: planner failed");
    }

    double wsum = 0.0;
    if (window == Window::Hann) {
        const double denom = static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            const double w = 0.5 * (1.0 - std::cos(two_pi * static_cast<double>(i) / denom));
            in[i] = x[i] * w;
            wsum += w;
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) in[i] = x[i];
        wsum = static_cast<double>(n);
    }

    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    const std::size_t n_bins = n / 2 + 1;
    Spectrum s;
    s.window = window;
    s.df = 1.0 / (static_cast<double>(n) * ts.dt);
    s.freq_hz.resize(n_bins);
    s.magnitude.resize(n_bins);
    const bool even = (n % 2 == 0);
    for (std::size_t k = 0; k < n_bins; ++k) {
        const double mag = std::hypot(out[k][0], out[k][1]);
        const bool one_sided_double = k != 0 && !(even && k == n_bins - 1);
        s.freq_hz[k] = static_cast<double>(k) * s.df;
        s.magnitude[k] = (one_sided_double ? 2.0 : 1.0) * mag / wsum;
    }
    fftw_free(in);
    fftw_free(out);
    return s;
}

namespace {

Peak refine(const Spectrum& s, std::size_t k) {
    Peak p{s.freq_hz[k], s.magnitude[k], k};
    if (k == 0 || k + 1 >= s.magnitude.size()) return p;
    const double m0 = s.magnitude[k - 1], m1 = s.magnitude[k], m2 = s.magnitude[k + 1];
    if (m0 <= 0.0 || m1 <= 0.0 || m2 <= 0.0) return p;
    const double y0 = std::log(m0), y1 = std::log(m1), y2 = std::log(m2);
    const double denom = y0 - 2.0 * y1 + y2;
    if (denom == 0.0) return p;
    double delta = 0.5 * (y0 - y2) / denom;
    delta = std::clamp(delta, -0.5, 0.5);
    p.freq_hz = (static_cast<double>(k) + delta) * s.df;
    p.magnitude = std::exp(y1 - 0.25 * (y0 - y2) * delta);
    return p;
}

}  // namespace

Peak dominant_peak(const Spectrum& s) {
    if (s.magnitude.empty()) throw ConfigError("dominant_peak: empty spectrum");
    std::size_t best = 0;
    for (std::size_t k = 1; k < s.magnitude.size(); ++k)
        if (s.magnitude[k] > s.magnitude[best]) best = k;
    return refine(s, best);
}

Peak dominant_peak(const Spectrum& s, double f_min_hz, double f_max_hz) {
    if (s.magnitude.empty()) throw ConfigError("dominant_peak: empty spectrum");
    if (!(f_min_hz <= f_max_hz)) throw ConfigError("dominant_peak: empty frequency band");
    bool found = false;
    std::size_t best = 0;
    for (std::size_t k = 0; k < s.magnitude.size(); ++k) {
        if (s.freq_hz[k] < f_min_hz || s.freq_hz[k] > f_max_hz) continue;
        if (!found || s.magnitude[k] > s.magnitude[best]) {
            best = k;
            found = true;
        }
    }
    if (!found) throw ConfigError("dominant_peak: no bins inside the requested band");
    return refine(s, best);
}

GrowthFit fit_growth_rate(const TimeSeries& ts, Channel channel, double carrier_hz) {
    validate(ts);
    if (!std::isfinite(carrier_hz) || carrier_hz <= 0.0)
        throw ConfigError("fit_growth_rate: carrier_hz must be positive");
    const std::vector<double>& x = pick(ts, channel);
    const std::size_t n = x.size();

    // One carrier period of samples per boxcar: averages the demodulated
    // counter-rotating term to ~0 and leaves half the envelope.
    const auto w = static_cast<std::size_t>(
        std::max(1.0, std::round(1.0 / (carrier_hz * ts.dt))));
    if (n < 2 * w || n < w + 16)
        throw TooShort("fit_growth_rate: series shorter than the demodulation window");

    const double wc = two_pi * carrier_hz;
    std::vector<std::complex<double>> prefix(n + 1, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        const double t = ts.t0 + static_cast<double>(i) * ts.dt;
        prefix[i + 1] = prefix[i] + x[i] * std::complex<double>(std::cos(wc * t),
                                                                std::sin(wc * t));
    }

    const std::size_t m = n - w + 1;
    const std::size_t start = static_cast<std::size_t>(0.4 * static_cast<double>(m));
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    std::size_t count = 0;
    for (std::size_t i = start; i < m; ++i) {
        const double env =
            2.0 * std::abs(prefix[i + w] - prefix[i]) / static_cast<double>(w);
        if (env <= 0.0) continue;
        const double t =
            ts.t0 + static_cast<double>(i) * ts.dt + 0.5 * static_cast<double>(w - 1) * ts.dt;
        const double y = std::log(env);
        sx += t;
        sy += y;
        sxx += t * t;
        sxy += t * y;
        syy += y * y;
        ++count;
    }
    if (count < 8) throw NotGrowing("fit_growth_rate: too few usable envelope points");

    const double nn = static_cast<double>(count);
    const double det = nn * sxx - sx * sx;
    if (det <= 0.0) throw NotGrowing("fit_growth_rate: degenerate time base");
    const double slope = (nn * sxy - sx * sy) / det;
    const double ss_tot = syy - sy * sy / nn;
    const double ss_res =
        std::max(0.0, ss_tot - slope * (sxy - sx * sy / nn));  // guard round-off
    if (ss_tot <= 1e-30) throw NotGrowing("fit_growth_rate: flat envelope");
    const double r2 = 1.0 - ss_res / ss_tot;
    if (slope <= 0.0) throw NotGrowing("fit_growth_rate: envelope is not growing");
    if (r2 < 0.99) throw NotGrowing("fit_growth_rate: envelope is not log-linear");
    return GrowthFit{slope, r2, count};
}

}  // namespace pwl
