// oracle.hpp — Brute-force ground truth: exact joint evolution in a truncated
// Fock space, the no-bath exact fidelity, and the transformed-J_x identity check

#pragma once

#include "zeno/bath.hpp"
#include "zeno/gates.hpp"
#include "zeno/types.hpp"

#include <vector>

namespace zeno::oracle {

struct FockTruncation {
    std::vector<bath::Mode> modes;
    int n_max = 15;                     // per-mode occupation cutoff, >= 1
    std::size_t dimension_cap = 4096;   // joint dimension 16 * (n_max+1)^#modes
};

// Joint dimension implied by the truncation; throws ResourceError beyond the cap.
Eigen::Index joint_dimension(const FockTruncation& trunc);

// H = H0 x 1 + 1 x H_E + lambda (J_z x sum_k g_k (a_k + a_k^dag)) + eps (J_x x 1),
// system-major ordering.
Eigen::MatrixXcd build_full_hamiltonian(gates::GateKind gate, double tau, double epsilon, double lambda,
                                        const FockTruncation& trunc);

// Caches the eigendecompositions so many times t can be evaluated cheaply.
class ExactEvolver {
  public:
    ExactEvolver(gates::GateKind gate, double tau, double epsilon, double lambda, const FockTruncation& trunc,
                 const DfsVector& phi0);

    // Interaction-picture survival probability of the initial logical state,
    // summed over the environment basis. Throws ResourceError when the norm
    // drifts or the top Fock level becomes occupied beyond 1e-8.
    double fidelity(double t) const;

  private:
    Eigen::Index bath_dim_;
    Eigen::VectorXd full_energies_, frame_energies_;
    Eigen::MatrixXcd full_vectors_, frame_vectors_;
    Eigen::Matrix<cxd, 16, 16> gate_vectors_;
    Eigen::Matrix<double, 16, 1> gate_energies_;
    Eigen::VectorXcd initial_full_;  // eigenbasis coordinates of phi0 x vacuum
    StateVec16 phi0_16_;
    std::vector<double> top_level_mask_;  // 1 where any mode occupies its n_max level
};

double exact_fidelity(double t, gates::GateKind gate, double tau, double epsilon, double lambda,
                      const FockTruncation& trunc, const DfsVector& phi0);

// |<phi0| e^{+i H0 t} e^{-i (H0 + eps J_x) t} |phi0>|^2 over the bare 16-dim space.
double exact_fidelity_nobath(double t, gates::GateKind gate, double tau, double epsilon, const DfsVector& phi0);

// Max elementwise deviation between U^dag(t) (J_x x 1) U(t) computed by explicit
// matrix exponentials and the displacement-algebra expression built from alpha,
// gamma, f_k. Compared on the sub-block with every mode occupation <= n_max/2,
// where truncation corruption is negligible; the displacement leakage guard
// (Poisson tail mass of |f_k|^2 beyond n_max/2 below 1e-8) is a precondition.
double verify_eq_t4(double t, double lambda, const FockTruncation& trunc);

// <0| e^{a gamma(t1)} e^{b gamma(t2)} |0> by truncated-Fock matrix exponentials.
cxd vacuum_correlation_fock(Sign a, Sign b, double t1, double t2, double lambda,
                            const std::vector<bath::Mode>& modes, int n_max);

}  // namespace zeno::oracle
