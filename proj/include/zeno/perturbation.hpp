// perturbation.hpp — Second-order fidelity of a computation perturbed by
// eps J_x while J_z is strongly monitored by the environment

#pragma once

#include "zeno/bath.hpp"
#include "zeno/dfs.hpp"
#include "zeno/gates.hpp"
#include "zeno/types.hpp"

#include <memory>
#include <vector>

namespace zeno::pt {

struct PerturbationParams {
    double epsilon = 1.0;  // J_x strength; 0 is the degenerate limit with F = 1
    double lambda = 2000.0;
    bath::SpectralModel spectrum = bath::SpectralModel::continuum(1e5);
    gates::GateKind gate = gates::GateKind::cnot;
    double tau = 1.0;  // gate time
    DfsVector phi0 = dfs::default_initial_state();
};

// chi_±(t) = U0^dag(t) J_± U0(t) |phi0>, with U0 generated by a single gate
// Hamiltonian or a piecewise-constant schedule (held at its final value past
// the schedule end).
class ChiEvaluator {
  public:
    ChiEvaluator(const Operator16& hamiltonian, const DfsVector& phi0);
    ChiEvaluator(const gates::CouplingSchedule& schedule, const DfsVector& phi0);

    StateVec16 chi(Sign sign, double t) const;

    // Largest eigenvalue spread of any segment generator; bounds how fast the
    // chi inner products can oscillate.
    double frequency_spread() const { return spread_; }

  private:
    struct Segment {
        double start;
        Eigen::Matrix<cxd, 16, 16> vectors;
        Eigen::Matrix<double, 16, 1> energies;
        Operator16 prefix;  // product of the full segments before this one
    };
    Operator16 u0(double t) const;

    std::vector<Segment> segments_;
    double total_duration_ = 0.0;
    Operator16 final_unitary_ = Operator16::Identity();
    StateVec16 phi0_16_;
    Operator16 j_plus_, j_minus_;
    double spread_ = 0.0;
};

// The c-number functions and the assembled correlation kernel
// K(t1,t2) = eps^2 [Gamma_pp C_-+ + Gamma_mm C_+-]; the pm/mp cross terms
// vanish on orthogonal J_z sectors and are kept only for the structural checks.
class Kernel {
  public:
    explicit Kernel(const PerturbationParams& p);

    cxd gamma_pp(double t1, double t2) const;
    cxd gamma_mm(double t1, double t2) const;
    cxd gamma_pm(double t1, double t2) const;
    cxd gamma_mp(double t1, double t2) const;
    cxd operator()(double t1, double t2) const;

    const PerturbationParams& params() const { return params_; }
    const ChiEvaluator& chi() const { return chi_; }

  private:
    PerturbationParams params_;
    ChiEvaluator chi_;
    bath::BathParams bath_;
};

struct QuadratureSettings {
    double step_override = 0.0;  // 0: derive from the phase-resolution rule
    int gauss_points = 4;        // Gauss-Legendre points per panel
    bool convergence_check = true;
    double tolerance = 1e-6;  // allowed |F_h - F_{h/2}| per reported point
    int threads = 1;
};

struct CurvePoint {
    double eps_t;
    double fidelity;
    double coarse = 0.0;        // step-h estimate when the check ran
    bool exceeds_one = false;   // F > 1 + 1e-6, reported rather than clamped
    bool quad_warning = false;  // refinement levels disagree beyond tolerance
};

struct FidelityCurve {
    std::vector<CurvePoint> points;
    PerturbationParams params;
    double step = 0.0;
    int gauss_points = 0;
    bool convergence_check = false;
    int threads = 1;
    double wall_seconds = 0.0;
};

// Composite Gauss-Legendre step satisfying
// h <= min(2 pi / (8 * phase rate), min grid spacing / 16).
double resolve_step(const std::vector<double>& times, const PerturbationParams& p, const QuadratureSettings& q);

// F at each grid value of eps*t (sorted, nonnegative). The grid is mapped to
// absolute times via epsilon (taken verbatim when epsilon = 0, where F = 1
// identically). All points of one curve share one node set, accumulated
// cumulatively; points are deterministic for any thread count.
FidelityCurve fidelity_curve(const std::vector<double>& eps_t_grid, const PerturbationParams& p,
                             const QuadratureSettings& q = {});

// Single absolute-time evaluation. Throws QuadratureError when the two
// refinement levels disagree beyond tolerance (convergence_check on).
double fidelity(double t, const PerturbationParams& p, const QuadratureSettings& q = {});

StateVec16 chi(Sign sign, double t, const PerturbationParams& p);

}  // namespace zeno::pt
