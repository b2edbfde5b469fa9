#pragma once

#include <cstddef>
#include <vector>

#include "pwl/model.hpp"

namespace pwl {

enum class Window { Rect, Hann };
enum class Channel { E, G };

// One-sided amplitude spectrum: magnitude[k] estimates the amplitude of a
// sinusoid at freq_hz[k] (coherent-gain normalisation, factor 2 on interior
// bins so a unit cosine on-bin reads 1.0).
struct Spectrum {
    double df = 0.0;  // bin spacing, Hz
    std::vector<double> freq_hz;
    std::vector<double> magnitude;
    Window window = Window::Rect;
};

struct Peak {
    double freq_hz = 0.0;
    double magnitude = 0.0;
    std::size_t bin = 0;  // index of the winning bin before interpolation
};

struct GrowthFit {
    double rate = 0.0;       // 1/s, slope of ln|envelope|
    double r_squared = 0.0;  // goodness of the log-linear fit
    std::size_t n_points = 0;
};

// Windowed real FFT of one channel.  Requires at least 1024 samples
// (throws TooShort below that).
Spectrum fft_spectrum(const TimeSeries& ts, Channel channel, Window window);

// Highest-magnitude bin refined by three-point parabolic interpolation on the
// log magnitude (clamped to +-1/2 bin; falls back to the bin centre at the
// spectrum edges or for non-positive neighbours).
Peak dominant_peak(const Spectrum& s);

// Same, restricted to bins whose centre lies in [f_min_hz, f_max_hz].
Peak dominant_peak(const Spectrum& s, double f_min_hz, double f_max_hz);

// Exponential growth rate of the carrier envelope: demodulates the channel at
// carrier_hz, extracts the envelope with a one-period boxcar, then fits
// ln|envelope| over the trailing 60% of the series.  Throws NotGrowing when
// the envelope is flat, decaying, or not log-linear (R^2 < 0.99).
GrowthFit fit_growth_rate(const TimeSeries& ts, Channel channel, double carrier_hz);

}  // namespace pwl
