#include "pwl/cavity.hpp"

#include <algorithm>
#include <cmath>

#include "pwl/analytic.hpp"
#include "pwl/errors.hpp"

namespace pwl {

void validate(const CavityConfig& cav) {
    if (!(std::isfinite(cav.c) && cav.c > 0.0))
        throw ConfigError("cavity: wave speed must be positive and finite");
    if (!(std::isfinite(cav.omega_e) && std::isfinite(cav.omega_g) && cav.omega_g > 0.0 &&
          cav.omega_e > cav.omega_g))
        throw ConfigError("cavity: require omega_e > omega_g > 0");
    if (!(std::isfinite(cav.chi) && cav.chi > 0.0))
        throw ConfigError("cavity: mixer efficiency chi must be positive");
    if (!(std::isfinite(cav.x_r) && cav.x_r >= 0.0))
        throw ConfigError("cavity: antenna position x_r must be non-negative");
    if (!(std::isfinite(cav.a0) && cav.a0 >= 0.0))
        throw ConfigError("cavity: pump amplitude must be non-negative");
    if (!(std::isfinite(cav.nu) && cav.nu >= 0.0))
        throw ConfigError("cavity: pump frequency must be non-negative");
    if (!std::isfinite(cav.phi)) throw ConfigError("cavity: pump phase must be finite");
}

std::pair<double, double> effective_coupling(const CavityConfig& cav) {
    validate(cav);
    return {cav.chi * std::cos(cav.k_e() * cav.x_r), cav.chi * std::cos(cav.k_g() * cav.x_r)};
}

SystemConfig cavity_system(const CavityConfig& cav) {
    const auto [chi_e, chi_g] = effective_coupling(cav);
    SystemConfig cfg;
    cfg.omega_e_hz = cav.omega_e / two_pi;
    cfg.omega_g_hz = cav.omega_g / two_pi;
    cfg.chi_e = chi_e;
    cfg.chi_g = chi_g;
    return cfg;
}

std::complex<double> cavity_gain(const CavityConfig& cav, CavityBranch branch) {
    validate(cav);
    const double sign = branch == CavityBranch::SumPump ? 1.0 : -1.0;
    const double cc = std::cos(cav.k_e() * cav.x_r) * std::cos(cav.k_g() * cav.x_r);
    const double radicand =
        sign * cav.chi * cav.chi * cc * cav.a0 * cav.a0 / (4.0 * cav.omega_e * cav.omega_g);
    return root_of_real(radicand);
}

DpaWindows dpa_windows(const CavityConfig& cav, int m_max) {
    validate(cav);
    if (m_max < 0) throw ConfigError("dpa_windows: m_max must be >= 0");

    const double le = cav.lambda_e();
    const double lg = cav.lambda_g();
    DpaWindows w;
    w.formula.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        const double q = 0.25 * static_cast<double>(2 * m + 1);
        w.formula.push_back({q * le, q * lg});
    }
    const double x_hi = 0.25 * static_cast<double>(2 * m_max + 1) * lg;

    // Exact regions: the product chi_e(x) chi_g(x) changes sign only at the
    // quarter-wave nodes of either cosine; classify each inter-node segment by
    // its midpoint and merge runs of negative segments.
    std::vector<double> cuts{0.0, x_hi};
    for (double lambda : {le, lg}) {
        for (int j = 0;; ++j) {
            const double x = 0.25 * static_cast<double>(2 * j + 1) * lambda;
            if (x >= x_hi) break;
            cuts.push_back(x);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const double xm = 0.5 * (a + b);
        const bool negative =
            std::cos(cav.k_e() * xm) * std::cos(cav.k_g() * xm) < 0.0;
        if (!negative) continue;
        if (!w.exact.empty() && w.exact.back().hi == a) {
            w.exact.back().hi = b;  // contiguous negative segments share a node
        } else {
            w.exact.push_back({a, b});
        }
    }
    return w;
}

}  // namespace pwl
