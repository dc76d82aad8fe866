#include "zeno/gates.hpp"

#include "zeno/dfs.hpp"
#include "zeno/spin.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeno::gates {

namespace {

constexpr double pi = std::numbers::pi;

PauliAxis axis_of(int i) {
    switch (i) {
        case 0: return PauliAxis::x;
        case 1: return PauliAxis::y;
        default: return PauliAxis::z;
    }
}

Operator16 two_body(int m, int n, PauliAxis a, PauliAxis b) {
    return spin::pauli_op(m, a) * spin::pauli_op(n, b);
}

void require_positive_tau(double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("gate_hamiltonian: tau must be positive");
}

}  // namespace

int pair_index(int m, int n) {
    if (m < 1 || n > 4 || m >= n) throw std::invalid_argument("pair_index: need 1 <= m < n <= 4");
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}};
    return table[m - 1][n - 1];
}

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::cnot: return "cnot";
        case GateKind::t1: return "t1";
        case GateKind::t2: return "t2";
        case GateKind::h1: return "h1";
        case GateKind::h2: return "h2";
        case GateKind::idle: return "idle";
    }
    return "?";
}

GateKind gate_from_string(const std::string& name) {
    if (name == "cnot") return GateKind::cnot;
    if (name == "t1") return GateKind::t1;
    if (name == "t2") return GateKind::t2;
    if (name == "h1") return GateKind::h1;
    if (name == "h2") return GateKind::h2;
    if (name == "idle") return GateKind::idle;
    throw std::invalid_argument("unknown gate: " + name);
}

Operator16 build_general(const GeneralCoupling& c, double* asymmetry) {
    Operator16 h = Operator16::Zero();
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a < 3; ++a)
            if (c.field[n - 1](a) != 0.0) h -= 0.5 * c.field[n - 1](a) * spin::pauli_op(n, axis_of(a));
    for (int m = 1; m <= 4; ++m)
        for (int n = m + 1; n <= 4; ++n) {
            const Eigen::Matrix3d& g = c.pair[pair_index(m, n)];
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    if (g(a, b) != 0.0) h += 0.25 * g(a, b) * two_body(m, n, axis_of(a), axis_of(b));
        }
    // Products of commuting Hermitian factors are already Hermitian here, so the
    // asymmetry is roundoff-level; symmetrize anyway and report it.
    const double asym = max_abs(h - h.adjoint());
    if (asymmetry) *asymmetry = asym;
    h = 0.5 * (h + Operator16(h.adjoint()));
    return h;
}

Operator16 build_commuting(const CommutingCoupling& c) {
    Operator16 h = Operator16::Zero();
    for (int n = 1; n <= 4; ++n)
        if (c.bz[n - 1] != 0.0) h -= 0.5 * c.bz[n - 1] * spin::pauli_op(n, PauliAxis::z);
    for (int m = 1; m <= 4; ++m)
        for (int n = m + 1; n <= 4; ++n) {
            const int p = pair_index(m, n);
            if (c.gzz[p] != 0.0) h += 0.25 * c.gzz[p] * two_body(m, n, PauliAxis::z, PauliAxis::z);
            if (c.gxx[p] != 0.0)
                h += 0.25 * c.gxx[p] *
                     (two_body(m, n, PauliAxis::x, PauliAxis::x) + two_body(m, n, PauliAxis::y, PauliAxis::y));
            if (c.gxy[p] != 0.0)
                h += 0.25 * c.gxy[p] *
                     (two_body(m, n, PauliAxis::x, PauliAxis::y) - two_body(m, n, PauliAxis::y, PauliAxis::x));
        }
    return h;
}

CommutingCoupling gate_coupling(GateKind kind, double tau) {
    require_positive_tau(tau);
    CommutingCoupling c;
    const double q = pi / (4.0 * tau);
    switch (kind) {
        case GateKind::cnot:
            c.bz[2] = c.bz[3] = -2.0 * q;
            c.gxx[pair_index(1, 2)] = -4.0 * q;
            break;
        case GateKind::t1:
            c.bz[2] = c.bz[3] = q;
            break;
        case GateKind::t2:
            c.bz[1] = c.bz[3] = q;
            break;
        case GateKind::h1:
            c.bz[0] = c.bz[1] = -q * (2.0 - std::sqrt(2.0));
            c.bz[2] = c.bz[3] = -q * (2.0 + std::sqrt(2.0));
            c.gxx[pair_index(1, 3)] = c.gxx[pair_index(2, 4)] = -2.0 * q * std::sqrt(2.0);
            break;
        case GateKind::h2:
            c.bz[0] = c.bz[2] = -q * (2.0 - std::sqrt(2.0));
            c.bz[1] = c.bz[3] = -q * (2.0 + std::sqrt(2.0));
            c.gxx[pair_index(1, 2)] = c.gxx[pair_index(3, 4)] = -2.0 * q * std::sqrt(2.0);
            break;
        case GateKind::idle:
            break;
    }
    return c;
}

Operator16 gate_hamiltonian(GateKind kind, double tau) {
    require_positive_tau(tau);
    using spin::pauli_op;
    const auto sz = [](int n) { return pauli_op(n, PauliAxis::z); };
    const auto flipflop = [](int m, int n) {
        return two_body(m, n, PauliAxis::x, PauliAxis::x) + two_body(m, n, PauliAxis::y, PauliAxis::y);
    };
    switch (kind) {
        case GateKind::cnot:
            return (pi / (4.0 * tau)) * Operator16(sz(3) + sz(4) - flipflop(1, 2));
        case GateKind::t1:
            return (-pi / (8.0 * tau)) * Operator16(sz(3) + sz(4));
        case GateKind::t2:
            return (-pi / (8.0 * tau)) * Operator16(sz(2) + sz(4));
        case GateKind::h1:
            return (pi / (8.0 * tau)) *
                   Operator16((2.0 - std::sqrt(2.0)) * (sz(1) + sz(2)) + (2.0 + std::sqrt(2.0)) * (sz(3) + sz(4)) -
                              std::sqrt(2.0) * (flipflop(1, 3) + flipflop(2, 4)));
        case GateKind::h2:
            return (pi / (8.0 * tau)) *
                   Operator16((2.0 - std::sqrt(2.0)) * (sz(1) + sz(3)) + (2.0 + std::sqrt(2.0)) * (sz(2) + sz(4)) -
                              std::sqrt(2.0) * (flipflop(1, 2) + flipflop(3, 4)));
        case GateKind::idle:
            return Operator16::Zero();
    }
    throw std::invalid_argument("gate_hamiltonian: unknown gate");
}

Matrix4 target_unitary(GateKind kind) {
    Matrix4 u = Matrix4::Identity();
    const cxd phase = std::exp(cxd(0.0, pi / 4.0));
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::cnot:
            u.setZero();
            u(0, 0) = u(1, 1) = 1.0;
            u(2, 3) = u(3, 2) = 1.0;
            break;
        case GateKind::t1:
            u(2, 2) = u(3, 3) = phase;
            break;
        case GateKind::t2:
            u(1, 1) = u(3, 3) = phase;
            break;
        case GateKind::h1:
            u.setZero();
            u(0, 0) = u(0, 2) = u(1, 1) = u(1, 3) = u(2, 0) = u(3, 1) = r;
            u(2, 2) = u(3, 3) = -r;
            break;
        case GateKind::h2:
            u.setZero();
            u(0, 0) = u(0, 1) = u(1, 0) = u(2, 2) = u(2, 3) = u(3, 2) = r;
            u(1, 1) = u(3, 3) = -r;
            break;
        case GateKind::idle:
            break;
    }
    return u;
}

GateCheck verify_gate(GateKind kind, double tau) {
    require_positive_tau(tau);
    const Operator16 u = spin::expm_unitary(gate_hamiltonian(kind, tau), tau);
    const Matrix4 restricted = dfs::restrict_to_dfs(u);
    GateCheck check;
    check.max_error = max_abs(restricted - target_unitary(kind));
    const Operator16 p = dfs::projector();
    check.leakage = ((Operator16::Identity() - p) * u * p).norm();
    return check;
}

int hermitian_span_rank(const SpanOptions& opts) {
    // Each enabled parameter direction maps to a restricted Hermitian matrix,
    // flattened into R^16 (4 diagonal entries + re/im of the 6 upper entries).
    std::vector<Eigen::Matrix<double, 16, 1>> columns;
    const auto push = [&columns](const CommutingCoupling& c) {
        const Matrix4 b = dfs::restrict_to_dfs(build_commuting(c));
        Eigen::Matrix<double, 16, 1> col;
        int k = 0;
        for (int i = 0; i < 4; ++i) col(k++) = b(i, i).real();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                col(k++) = b(i, j).real();
                col(k++) = b(i, j).imag();
            }
        columns.push_back(col);
    };
    for (int n = 0; n < 4 && opts.bz; ++n) {
        CommutingCoupling c;
        c.bz[n] = 1.0;
        push(c);
    }
    for (int p = 0; p < 6; ++p) {
        if (opts.gzz) {
            CommutingCoupling c;
            c.gzz[p] = 1.0;
            push(c);
        }
        if (opts.gxx) {
            CommutingCoupling c;
            c.gxx[p] = 1.0;
            push(c);
        }
        if (opts.gxy) {
            CommutingCoupling c;
            c.gxy[p] = 1.0;
            push(c);
        }
    }
    if (columns.empty()) return 0;
    Eigen::MatrixXd map(16, static_cast<Eigen::Index>(columns.size()));
    for (Eigen::Index j = 0; j < map.cols(); ++j) map.col(j) = columns[static_cast<std::size_t>(j)];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(map);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-10) ++rank;
    return rank;
}

Operator16 schedule_unitary(const CouplingSchedule& schedule) {
    Operator16 u = Operator16::Identity();
    for (const auto& segment : schedule) {
        if (!(segment.duration > 0.0)) throw std::invalid_argument("schedule_unitary: durations must be positive");
        u = spin::expm_unitary(build_commuting(segment.coupling), segment.duration) * u;
    }
    return u;
}

}  // namespace zeno::gates
