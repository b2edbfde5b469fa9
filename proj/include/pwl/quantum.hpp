#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "pwl/model.hpp"

namespace pwl {

// Two-mode Fock space truncated at n_max quanta per mode; basis |n_e, n_g>
// ordered row-major in n_e then n_g, dimension (n_max + 1)^2.
struct TruncatedOperator {
    int n_max = 1;
    Eigen::MatrixXcd matrix;
};

struct QuantumState {
    int n_max = 1;
    Eigen::VectorXcd coeff;
};

inline Eigen::Index fock_index(int n_max, int ne, int ng) {
    return static_cast<Eigen::Index>(ne) * (n_max + 1) + ng;
}

// Truncated annihilation operator for one mode (a|n> = sqrt(n)|n-1>).
Eigen::MatrixXcd mode_annihilator(int n_max, bool e_mode);

// Product coherent state |alpha_e> x |alpha_g>, renormalized to 1 on the
// truncated space.
QuantumState coherent_state(std::complex<double> alpha_e, std::complex<double> alpha_g,
                            int n_max);

// Generalized two-mode Hamiltonian (hbar = 1):
//   H = w_e Ne + w_g Ng
//     + chi_g P Ae+ Ag+  +  chi_e P* Ae Ag      (sum-frequency pair)
//     + chi_g P Ae+ Ag   +  chi_e P* Ae Ag+     (difference-frequency pair)
// Hermitian exactly when chi_e = conj(chi_g) (for real couplings: equal).
TruncatedOperator build_hamiltonian(std::complex<double> chi_e, std::complex<double> chi_g,
                                    std::complex<double> pump_amp, double omega_e,
                                    double omega_g, int n_max);

// ||H - H'||_F / max(||H||_F, tiny); zero iff Hermitian.
double hermiticity_defect(const TruncatedOperator& op);

enum class PumpBranch { DiffPump, SumPump };

// Interaction-picture description of one resonance branch: the generator is
//   V(t) = A e^{-i delta t} + B e^{+i delta t}
// with A/B the branch's creation/annihilation pair scaled by kappa and the
// pump phasor.  kappa_g = -chi_g/(4 w_e), kappa_e = -chi_e/(4 w_g) reproduce
// the classical envelope equations for <a_e>, <a_g>.
struct QuantumSystem {
    double kappa_e = 0.0;
    double kappa_g = 0.0;
    std::complex<double> pump{1.0, 0.0};
    double omega_e = 0.0;  // rad/s, used only for <H> reporting
    double omega_g = 0.0;
    double detuning = 0.0;  // rad/s
    PumpBranch branch = PumpBranch::DiffPump;
};

QuantumSystem make_quantum_system(const SystemConfig& cfg, const PumpConfig& pump,
                                  PumpBranch branch);

// Sampled trajectory of a (possibly non-unitary) evolution.  Expectations are
// normalized by <psi|psi>; h_exp_raw keeps the unnormalized <psi|H|psi>.
struct QuantumRun {
    std::vector<double> t;
    std::vector<std::complex<double>> a_e;
    std::vector<std::complex<double>> a_g;
    std::vector<std::complex<double>> h_exp;
    std::vector<std::complex<double>> h_exp_raw;
    std::vector<double> norm;     // <psi|psi>
    std::vector<double> n_total;  // <Ne + Ng>, normalized
    double top_shell_max = 0.0;   // peak population fraction of the n_max shell
};

// Fixed-generator evolution d psi/dt = -i H psi by classic 4th-order steps
// (the 4th-order Taylor polynomial of exp(-i H dt) on a linear system).
// Requires dt <= 0.01 / ||H||_F; the norm is never renormalized.  Throws
// TruncationBreach when the n_max shell holds more than 1e-3 of the norm.
QuantumRun evolve(const QuantumState& init, const TruncatedOperator& op, double t_end,
                  double dt);

// Same stepper for the rotating-frame generator of one branch.  <a_e>, <a_g>
// are rotating-frame amplitudes, directly comparable to the classical slow
// envelopes; <H> is reported as <H0> + <V(t)>.
QuantumRun evolve(const QuantumState& init, const QuantumSystem& sys, double t_end,
                  double dt);

// Finite-difference check of the generalized Ehrenfest identity
//   d<a>/dt = -i<[a, Hh]> - i<{a, Ha}> + 2i <a><Ha>,  Hh/Ha = (H +- H')/2,
// along a short fixed-generator trajectory from a weak coherent state.
// Returns the worst relative residual over the two modes.
double heisenberg_residual(const TruncatedOperator& op, int n_max);

}  // namespace pwl
