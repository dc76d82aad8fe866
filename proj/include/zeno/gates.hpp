// gates.hpp — Spin-boson control Hamiltonians, the five named gates, and
// their verification against the target unitaries

#pragma once

#include "zeno/types.hpp"

#include <array>
#include <string>
#include <vector>

namespace zeno::gates {

// Full two-body coupling of the general control Hamiltonian:
// local fields B^(n) plus a 3x3 coupling matrix G^(mn) per pair m<n.
struct GeneralCoupling {
    std::array<Eigen::Vector3d, 4> field{Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero(),
                                         Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()};
    std::array<Eigen::Matrix3d, 6> pair{Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                        Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero(),
                                        Eigen::Matrix3d::Zero(), Eigen::Matrix3d::Zero()};
};

// Pairs ordered (1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
int pair_index(int m, int n);

// The J_z-commuting reduction: 4 local Bz fields and per pair the zz, the
// symmetric xx(+yy), and the antisymmetric xy(-yx) couplings — 22 parameters.
struct CommutingCoupling {
    std::array<double, 4> bz{};
    std::array<double, 6> gzz{};
    std::array<double, 6> gxx{};
    std::array<double, 6> gxy{};
};

enum class GateKind { cnot, t1, t2, h1, h2, idle };

std::string to_string(GateKind kind);
GateKind gate_from_string(const std::string& name);  // throws std::invalid_argument

struct ScheduleSegment {
    double duration;  // > 0
    CommutingCoupling coupling;
};
using CouplingSchedule = std::vector<ScheduleSegment>;

// H0 = -(1/2) sum_n B^(n).Sigma^(n) + (1/4) sum_{m<n} Sigma^(m)^T G^(mn) Sigma^(n).
// A general G is not automatically Hermitian; the result is symmetrized and the
// asymmetry norm reported through the optional out-parameter.
Operator16 build_general(const GeneralCoupling& c, double* asymmetry = nullptr);

// The reduced form; commutes with J_z by construction.
Operator16 build_commuting(const CommutingCoupling& c);

// Parameter set whose build_commuting equals gate_hamiltonian(kind, tau).
CommutingCoupling gate_coupling(GateKind kind, double tau);

// The named gate Hamiltonians (idle returns zero). tau must be positive.
Operator16 gate_hamiltonian(GateKind kind, double tau);

// The literal 4x4 target matrices in the ordered encoded basis (idle: identity).
Matrix4 target_unitary(GateKind kind);

struct GateCheck {
    double max_error;  // max elementwise deviation of the restricted unitary from target
    double leakage;    // Frobenius norm of (1-P) U P
};
GateCheck verify_gate(GateKind kind, double tau);

struct SpanOptions {
    bool bz = true;
    bool gzz = true;
    bool gxx = true;
    bool gxy = true;
};

// Numerical rank (singular values above 1e-10) of the real-linear map from the
// enabled coupling parameters to the restricted 4x4 Hermitian matrices.
int hermitian_span_rank(const SpanOptions& opts = {});

// Ordered product of segment propagators, later segments applied on the left.
// Empty schedule yields the identity.
Operator16 schedule_unitary(const CouplingSchedule& schedule);

}  // namespace zeno::gates
