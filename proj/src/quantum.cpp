#include "pwl/quantum.hpp"

#include <cmath>
#include <complex>

#include "pwl/errors.hpp"

namespace pwl {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

void check_n_max(int n_max) {
    if (n_max < 1) throw ConfigError("quantum: n_max must be >= 1");
}

Eigen::Index dim_of(int n_max) {
    return static_cast<Eigen::Index>(n_max + 1) * (n_max + 1);
}

void check_operator(const TruncatedOperator& op) {
    check_n_max(op.n_max);
    const Eigen::Index d = dim_of(op.n_max);
    if (op.matrix.rows() != d || op.matrix.cols() != d)
        throw ConfigError("quantum: operator dimension does not match n_max");
}

void check_state(const QuantumState& st) {
    check_n_max(st.n_max);
    if (st.coeff.size() != dim_of(st.n_max))
        throw ConfigError("quantum: state dimension does not match n_max");
    if (std::abs(st.coeff.squaredNorm() - 1.0) > 1e-6)
        throw ConfigError("quantum: initial state must be normalized");
}

// Population fraction of the outermost shell (n_e = n_max or n_g = n_max).
double top_shell_fraction(const Eigen::VectorXcd& psi, int n_max) {
    double shell = 0.0;
    for (int ne = 0; ne <= n_max; ++ne)
        shell += std::norm(psi(fock_index(n_max, ne, n_max)));
    for (int ng = 0; ng < n_max; ++ng)
        shell += std::norm(psi(fock_index(n_max, n_max, ng)));
    const double total = psi.squaredNorm();
    return total > 0.0 ? shell / total : 0.0;
}

cplx normalized_expectation(const Eigen::VectorXcd& psi, const Eigen::MatrixXcd& op) {
    const double n2 = psi.squaredNorm();
    return psi.dot(op * psi) / n2;  // Eigen::dot conjugates the left argument
}

}  // namespace

Eigen::MatrixXcd mode_annihilator(int n_max, bool e_mode) {
    check_n_max(n_max);
    const Eigen::Index d = dim_of(n_max);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
    for (int ne = 0; ne <= n_max; ++ne) {
        for (int ng = 0; ng <= n_max; ++ng) {
            if (e_mode && ne > 0)
                a(fock_index(n_max, ne - 1, ng), fock_index(n_max, ne, ng)) =
                    std::sqrt(static_cast<double>(ne));
            if (!e_mode && ng > 0)
                a(fock_index(n_max, ne, ng - 1), fock_index(n_max, ne, ng)) =
                    std::sqrt(static_cast<double>(ng));
        }
    }
    return a;
}

QuantumState coherent_state(cplx alpha_e, cplx alpha_g, int n_max) {
    check_n_max(n_max);
    std::vector<cplx> fe(n_max + 1), fg(n_max + 1);
    fe[0] = fg[0] = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        const double rs = 1.0 / std::sqrt(static_cast<double>(n));
        fe[n] = fe[n - 1] * alpha_e * rs;
        fg[n] = fg[n - 1] * alpha_g * rs;
    }
    QuantumState st;
    st.n_max = n_max;
    st.coeff.resize(dim_of(n_max));
    for (int ne = 0; ne <= n_max; ++ne)
        for (int ng = 0; ng <= n_max; ++ng)
            st.coeff(fock_index(n_max, ne, ng)) = fe[ne] * fg[ng];
    const double nrm = st.coeff.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm))
        throw NumericError("coherent_state: degenerate amplitude");
    st.coeff /= nrm;
    return st;
}

TruncatedOperator build_hamiltonian(cplx chi_e, cplx chi_g, cplx pump_amp, double omega_e,
                                    double omega_g, int n_max) {
    check_n_max(n_max);
    if (!(std::isfinite(omega_e) && std::isfinite(omega_g) && omega_e >= 0.0 &&
          omega_g >= 0.0))
        throw ConfigError("build_hamiltonian: mode frequencies must be non-negative");

    const Eigen::MatrixXcd ae = mode_annihilator(n_max, true);
    const Eigen::MatrixXcd ag = mode_annihilator(n_max, false);
    const Eigen::MatrixXcd aed = ae.adjoint();
    const Eigen::MatrixXcd agd = ag.adjoint();

    TruncatedOperator op;
    op.n_max = n_max;
    op.matrix = omega_e * (aed * ae) + omega_g * (agd * ag) +
                chi_g * pump_amp * (aed * agd) + chi_e * std::conj(pump_amp) * (ae * ag) +
                chi_g * pump_amp * (aed * ag) + chi_e * std::conj(pump_amp) * (ae * agd);
    return op;
}

double hermiticity_defect(const TruncatedOperator& op) {
    check_operator(op);
    const double num = (op.matrix - op.matrix.adjoint()).norm();
    return num / std::max(op.matrix.norm(), 1e-300);
}

QuantumSystem make_quantum_system(const SystemConfig& cfg, const PumpConfig& pump,
                                  PumpBranch branch) {
    validate(cfg);
    validate(pump);
    const Detunings det = derived_detunings(cfg, pump);
    QuantumSystem sys;
    sys.kappa_g = -cfg.chi_g / (4.0 * cfg.omega_e());
    sys.kappa_e = -cfg.chi_e / (4.0 * cfg.omega_g());
    sys.pump = pump.phasor();
    sys.omega_e = cfg.omega_e();
    sys.omega_g = cfg.omega_g();
    sys.detuning = branch == PumpBranch::DiffPump ? det.delta : det.delta_s;
    sys.branch = branch;
    return sys;
}

namespace {

// Shared fixed/rotating-generator stepper.  h_of(t) applies the generator to
// a vector; h_mat(t) materializes it for expectation reporting; h0_diag adds
// the free part to <H> (empty for the fixed-generator overload, where H
// already contains it).
struct Stepper {
    int n_max;
    double t_end;
    double dt;
    Eigen::VectorXd h0_diag;  // may be empty

    template <typename ApplyH, typename ExpectH>
    QuantumRun run(const QuantumState& init, ApplyH&& apply_h, ExpectH&& expect_h) const {
        if (!(std::isfinite(t_end) && t_end > 0.0))
            throw ConfigError("evolve: t_end must be positive and finite");
        const auto n_steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
        const double h = t_end / static_cast<double>(n_steps);

        QuantumRun run;
        run.t.reserve(n_steps + 1);
        Eigen::VectorXcd psi = init.coeff;

        auto record = [&](std::size_t i) {
            const double t = static_cast<double>(i) * h;
            const double n2 = psi.squaredNorm();
            if (!std::isfinite(n2) || n2 <= 0.0)
                throw NonFinite("evolve: state norm left the representable range");
            const double shell = top_shell_fraction(psi, n_max);
            run.top_shell_max = std::max(run.top_shell_max, shell);
            if (shell > 1e-3)
                throw TruncationBreach("evolve: n_max shell population exceeds 1e-3");
            run.t.push_back(t);
            run.norm.push_back(n2);
            cplx ae{0.0, 0.0}, ag{0.0, 0.0};
            double ntot = 0.0;
            // <a_e>, <a_g>, <Ne+Ng> accumulated directly from the ladder
            // structure: much cheaper than materialized operators.
            for (int ne = 0; ne <= n_max; ++ne) {
                for (int ng = 0; ng <= n_max; ++ng) {
                    const Eigen::Index k = fock_index(n_max, ne, ng);
                    const cplx c = psi(k);
                    ntot += (ne + ng) * std::norm(c);
                    if (ne < n_max)
                        ae += std::conj(c) * std::sqrt(static_cast<double>(ne + 1)) *
                              psi(fock_index(n_max, ne + 1, ng));
                    if (ng < n_max)
                        ag += std::conj(c) * std::sqrt(static_cast<double>(ng + 1)) *
                              psi(fock_index(n_max, ne, ng + 1));
                }
            }
            run.a_e.push_back(ae / n2);
            run.a_g.push_back(ag / n2);
            run.n_total.push_back(ntot / n2);
            cplx h_raw = expect_h(t, psi);
            if (h0_diag.size() > 0) {
                cplx h0{0.0, 0.0};
                for (Eigen::Index k = 0; k < psi.size(); ++k)
                    h0 += h0_diag(k) * std::norm(psi(k));
                h_raw += h0;
            }
            run.h_exp_raw.push_back(h_raw);
            run.h_exp.push_back(h_raw / n2);
        };

        record(0);
        Eigen::VectorXcd k1, k2, k3, k4, tmp;
        for (std::size_t i = 0; i < n_steps; ++i) {
            const double t = static_cast<double>(i) * h;
            k1 = apply_h(t, psi);
            tmp = psi + (0.5 * h) * k1;
            k2 = apply_h(t + 0.5 * h, tmp);
            tmp = psi + (0.5 * h) * k2;
            k3 = apply_h(t + 0.5 * h, tmp);
            tmp = psi + h * k3;
            k4 = apply_h(t + h, tmp);
            psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            record(i + 1);
        }
        return run;
    }
};

}  // namespace

QuantumRun evolve(const QuantumState& init, const TruncatedOperator& op, double t_end,
                  double dt) {
    check_operator(op);
    check_state(init);
    if (init.n_max != op.n_max)
        throw ConfigError("evolve: state and operator truncations differ");
    const double scale = std::max(op.matrix.norm(), 1e-300);
    if (!(std::isfinite(dt) && dt > 0.0) || dt > 0.01 / scale)
        throw StepTooLarge("evolve: dt must satisfy dt <= 0.01/||H||");

    Stepper st{op.n_max, t_end, dt, Eigen::VectorXd{}};
    return st.run(
        init, [&](double, const Eigen::VectorXcd& psi) { return (-I * (op.matrix * psi)).eval(); },
        [&](double, const Eigen::VectorXcd& psi) { return cplx(psi.dot(op.matrix * psi)); });
}

QuantumRun evolve(const QuantumState& init, const QuantumSystem& sys, double t_end,
                  double dt) {
    check_state(init);
    const int n_max = init.n_max;
    const Eigen::MatrixXcd ae = mode_annihilator(n_max, true);
    const Eigen::MatrixXcd ag = mode_annihilator(n_max, false);

    Eigen::MatrixXcd a_term, b_term;
    if (sys.branch == PumpBranch::DiffPump) {
        a_term = sys.kappa_g * sys.pump * (ae.adjoint() * ag);
        b_term = sys.kappa_e * std::conj(sys.pump) * (ae * ag.adjoint());
    } else {
        a_term = sys.kappa_g * sys.pump * (ae.adjoint() * ag.adjoint());
        b_term = sys.kappa_e * std::conj(sys.pump) * (ae * ag);
    }

    const double scale =
        std::max(a_term.norm() + b_term.norm() + std::abs(sys.detuning), 1e-300);
    if (!(std::isfinite(dt) && dt > 0.0) || dt > 0.01 / scale)
        throw StepTooLarge("evolve: dt must satisfy dt <= 0.01/(||V|| + |detuning|)");

    Eigen::VectorXd h0(dim_of(n_max));
    for (int ne = 0; ne <= n_max; ++ne)
        for (int ng = 0; ng <= n_max; ++ng)
            h0(fock_index(n_max, ne, ng)) = sys.omega_e * ne + sys.omega_g * ng;

    auto apply = [&](double t, const Eigen::VectorXcd& psi) {
        const cplx ph = std::exp(-I * (sys.detuning * t));
        return (-I * (ph * (a_term * psi) + std::conj(ph) * (b_term * psi))).eval();
    };
    auto expect = [&](double t, const Eigen::VectorXcd& psi) {
        const cplx ph = std::exp(-I * (sys.detuning * t));
        return cplx(psi.dot(ph * (a_term * psi) + std::conj(ph) * (b_term * psi)));
    };

    Stepper st{n_max, t_end, dt, std::move(h0), Eigen::VectorXd{}};
    return st.run(init, apply, expect);
}

double heisenberg_residual(const TruncatedOperator& op, int n_max) {
    check_operator(op);
    if (n_max != op.n_max)
        throw ConfigError("heisenberg_residual: n_max must match the operator");

    const QuantumState init = coherent_state({0.1, 0.0}, {0.1, 0.0}, n_max);
    const double dt = 1e-3 / std::max(op.matrix.norm(), 1.0);

    // Nine fixed-generator steps; five-point stencil at the centre sample.
    const Eigen::MatrixXcd ae = mode_annihilator(n_max, true);
    const Eigen::MatrixXcd ag = mode_annihilator(n_max, false);
    Eigen::VectorXcd psi = init.coeff;
    std::vector<cplx> fe, fg;
    Eigen::VectorXcd psi_centre;
    for (int i = 0; i <= 8; ++i) {
        fe.push_back(normalized_expectation(psi, ae));
        fg.push_back(normalized_expectation(psi, ag));
        if (i == 4) psi_centre = psi;
        if (i == 8) break;
        const Eigen::VectorXcd k1 = -I * (op.matrix * psi);
        const Eigen::VectorXcd k2 = -I * (op.matrix * (psi + (0.5 * dt) * k1).eval());
        const Eigen::VectorXcd k3 = -I * (op.matrix * (psi + (0.5 * dt) * k2).eval());
        const Eigen::VectorXcd k4 = -I * (op.matrix * (psi + dt * k3).eval());
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    const Eigen::MatrixXcd hh = 0.5 * (op.matrix + op.matrix.adjoint());
    const Eigen::MatrixXcd ha = 0.5 * (op.matrix - op.matrix.adjoint());
    const cplx ha_exp = normalized_expectation(psi_centre, ha);

    double worst = 0.0;
    for (int mode = 0; mode < 2; ++mode) {
        const Eigen::MatrixXcd& a = mode == 0 ? ae : ag;
        const std::vector<cplx>& f = mode == 0 ? fe : fg;
        const cplx fd = (f[2] - 8.0 * f[3] + 8.0 * f[5] - f[6]) / (12.0 * dt);
        const cplx a_exp = normalized_expectation(psi_centre, a);
        const cplx comm = normalized_expectation(psi_centre, (a * hh - hh * a).eval());
        const cplx anti = normalized_expectation(psi_centre, (a * ha + ha * a).eval());
        const cplx rhs = -I * comm - I * anti + 2.0 * I * a_exp * ha_exp;
        worst = std::max(worst, std::abs(fd - rhs) / std::max(std::abs(rhs), 1e-30));
    }
    return worst;
}

}  // namespace pwl
