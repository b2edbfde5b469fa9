#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwl/cavity.hpp"
#include "pwl/model.hpp"

namespace pwl {

enum class SweepParameter { NuHz, ChiE, ChiG, XR };

struct SweepAxis {
    SweepParameter parameter = SweepParameter::NuHz;
    double min = 0.0;
    double max = 0.0;
    int count = 2;  // >= 2, linear inclusive spacing
};

enum class SweepMetric { FinalPeakMagnitude, FittedGrowthRate, AnalyticReOmega };

// A sweep varies one or two parameters over a fixed baseline system/pump.
// XR axes additionally need `cavity`: the cell system is rebuilt from the
// antenna position through the effective couplings.
struct SweepSpec {
    SweepAxis axis1;
    std::optional<SweepAxis> axis2;
    SystemConfig system;
    PumpConfig pump;
    InitialConditions init;
    std::optional<CavityConfig> cavity;
    SweepMetric metric = SweepMetric::FinalPeakMagnitude;
    double horizon_s = 0.5;  // ~5 gain periods of the baseline rate
};

// One grid cell, in row-major order (axis1 outer, axis2 inner).  Cells that
// fail keep their coordinates and carry error/error_kind with metric = NaN;
// a failing cell never aborts the grid.
struct SweepCell {
    double axis1 = 0.0;
    double axis2 = 0.0;  // NaN for 1-D sweeps
    double metric = 0.0;
    double growth_ratio = 0.0;  // last-10% / first-10% peak |E_e| (NaN if no sim)
    GainReport report;
    int sym_sign = 0;
    bool error = false;
    std::string error_kind;
};

// Evaluate every cell of the grid.  jobs <= 0 picks the hardware concurrency;
// results are bitwise independent of the worker count.
std::vector<SweepCell> run_sweep(const SweepSpec& spec, int jobs = 0);

// Analytic-only fast path: same grid with metric forced to AnalyticReOmega,
// so each cell carries sign(chi_e chi_g) and its regime label without any
// simulation.
std::vector<SweepCell> regime_map(const SweepSpec& spec, int jobs = 0);

// Antenna-position sweep of a feedback cavity: axis1 = x_r over
// [x_lo, x_hi], pump pinned to the branch resonance (omega_e -+ omega_g).
std::vector<SweepCell> sweep_antenna(const CavityConfig& cav, double x_lo, double x_hi,
                                     int count, CavityBranch branch, SweepMetric metric,
                                     double horizon_s, int jobs = 0);

}  // namespace pwl
