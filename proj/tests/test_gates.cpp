#include <doctest.h>

#include "zeno/dfs.hpp"
#include "zeno/gates.hpp"
#include "zeno/spin.hpp"

#include <numbers>
#include <random>

using namespace zeno;
using gates::GateKind;

namespace {

constexpr double pi = std::numbers::pi;

const GateKind all_gates[5] = {GateKind::cnot, GateKind::t1, GateKind::t2, GateKind::h1, GateKind::h2};

gates::CommutingCoupling random_commuting(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    gates::CommutingCoupling c;
    for (auto& v : c.bz) v = u(rng);
    for (auto& v : c.gzz) v = u(rng);
    for (auto& v : c.gxx) v = u(rng);
    for (auto& v : c.gxy) v = u(rng);
    return c;
}

// Embeds the reduced parameters into the general coupling form.
gates::GeneralCoupling embed(const gates::CommutingCoupling& c) {
    gates::GeneralCoupling g;
    for (int n = 0; n < 4; ++n) g.field[n] = Eigen::Vector3d(0.0, 0.0, c.bz[n]);
    for (int p = 0; p < 6; ++p) {
        Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
        m(2, 2) = c.gzz[p];
        m(0, 0) = m(1, 1) = c.gxx[p];
        m(0, 1) = c.gxy[p];
        m(1, 0) = -c.gxy[p];
        g.pair[p] = m;
    }
    return g;
}

}  // namespace

TEST_CASE("build_general basics") {
    CHECK(max_abs(gates::build_general(gates::GeneralCoupling{})) == 0.0);

    gates::GeneralCoupling c;
    c.field[0] = Eigen::Vector3d(0.0, 0.0, 0.7);
    CHECK(max_abs(Operator16(gates::build_general(c) + 0.35 * spin::pauli_op(1, PauliAxis::z))) < 1e-15);

    // a lone xz coupling violates the J_z condition
    gates::GeneralCoupling bad;
    bad.pair[gates::pair_index(1, 3)](0, 2) = 0.9;
    CHECK(spin::commutator_norm(gates::build_general(bad), spin::collective_j(PauliAxis::z)) > 1e-3);
}

TEST_CASE("build_commuting commutes with J_z and matches the general form") {
    std::mt19937_64 rng(2024);
    const Operator16 jz = spin::collective_j(PauliAxis::z);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = random_commuting(rng);
        const Operator16 h = gates::build_commuting(c);
        CHECK(is_hermitian(h, 1e-13));
        CHECK(spin::commutator_norm(h, jz) < 1e-13);
        CHECK(max_abs(Operator16(h - gates::build_general(embed(c)))) < 1e-13);
    }
}

TEST_CASE("general couplings commute with J_z only on the reduced pattern") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mag(0.1, 1.0);
    std::bernoulli_distribution coin(0.5);
    const Operator16 jz = spin::collective_j(PauliAxis::z);

    for (int trial = 0; trial < 100; ++trial) {
        // draw a generic coupling with at least one forbidden entry of size >= 0.1
        gates::GeneralCoupling g;
        for (int n = 0; n < 4; ++n)
            for (int a = 0; a < 3; ++a) g.field[n](a) = (coin(rng) ? 1.0 : -1.0) * mag(rng);
        for (int p = 0; p < 6; ++p)
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) g.pair[p](a, b) = (coin(rng) ? 1.0 : -1.0) * mag(rng);
        CHECK(spin::commutator_norm(gates::build_general(g), jz) > 1e-6);
    }
}

TEST_CASE("gate Hamiltonian actions on encoded states") {
    const double tau = 1.3;
    DfsVector one_zero = DfsVector::Zero();
    one_zero(2) = 1.0;
    const StateVec16 s10 = dfs::encode(one_zero);
    const StateVec16 ht1 = gates::gate_hamiltonian(GateKind::t1, tau) * s10;
    CHECK(max_abs(StateVec16(ht1 + (pi / (4.0 * tau)) * s10)) < 1e-14);

    DfsVector zero_zero = DfsVector::Zero();
    zero_zero(0) = 1.0;
    CHECK(max_abs(StateVec16(gates::gate_hamiltonian(GateKind::cnot, tau) * dfs::encode(zero_zero))) < 1e-15);
}

TEST_CASE("t2/h2 are t1/h1 with qubits 2 and 3 interchanged") {
    // conjugation by the swap permutation of qubits 2 and 3
    Operator16 swap23 = Operator16::Zero();
    for (int b = 0; b < 16; ++b) {
        const int b2 = (b >> 2) & 1, b3 = (b >> 1) & 1;
        const int swapped = (b & ~0b110) | (b3 << 2) | (b2 << 1);
        swap23(swapped, b) = 1.0;
    }
    const double tau = 0.9;
    CHECK(max_abs(Operator16(gates::gate_hamiltonian(GateKind::t2, tau) -
                             swap23 * gates::gate_hamiltonian(GateKind::t1, tau) * swap23)) < 1e-14);
    CHECK(max_abs(Operator16(gates::gate_hamiltonian(GateKind::h2, tau) -
                             swap23 * gates::gate_hamiltonian(GateKind::h1, tau) * swap23)) < 1e-14);
}

TEST_CASE("gate_coupling reproduces every gate Hamiltonian") {
    for (auto kind : all_gates) {
        const double tau = 1.7;
        CHECK(max_abs(Operator16(gates::build_commuting(gates::gate_coupling(kind, tau)) -
                                 gates::gate_hamiltonian(kind, tau))) < 1e-13);
    }
    CHECK(max_abs(gates::build_commuting(gates::gate_coupling(GateKind::idle, 1.0))) == 0.0);
}

TEST_CASE("antisymmetric xy coupling alone is Hermitian and commuting") {
    gates::CommutingCoupling c;
    c.gxy[gates::pair_index(1, 2)] = 0.6;
    const Operator16 h = gates::build_commuting(c);
    CHECK(is_hermitian(h, 1e-14));
    CHECK(spin::commutator_norm(h, spin::collective_j(PauliAxis::z)) < 1e-14);
}

TEST_CASE("target unitaries are the published matrices") {
    const Matrix4 cnot = gates::target_unitary(GateKind::cnot);
    Matrix4 expected = Matrix4::Zero();
    expected(0, 0) = expected(1, 1) = expected(2, 3) = expected(3, 2) = 1.0;
    CHECK(max_abs(Matrix4(cnot - expected)) == 0.0);

    const cxd phase = std::exp(cxd(0.0, pi / 4.0));
    Matrix4 t2 = Matrix4::Identity();
    t2(1, 1) = t2(3, 3) = phase;
    CHECK(max_abs(Matrix4(gates::target_unitary(GateKind::t2) - t2)) < 1e-15);

    const double r = 1.0 / std::sqrt(2.0);
    Matrix4 h1;
    h1 << r, 0, r, 0, 0, r, 0, r, r, 0, -r, 0, 0, r, 0, -r;
    CHECK(max_abs(Matrix4(gates::target_unitary(GateKind::h1) - h1)) < 1e-15);

    CHECK(max_abs(Matrix4(gates::target_unitary(GateKind::idle) - Matrix4::Identity())) == 0.0);
}

TEST_CASE("verify_gate: all five gates hit their targets, tau-independently") {
    for (auto kind : all_gates) {
        for (double tau : {0.1, 1.0, 10.0}) {
            const auto check = gates::verify_gate(kind, tau);
            CHECK(check.max_error < 1e-12);
            CHECK(check.leakage < 1e-12);
        }
        CHECK(spin::commutator_norm(gates::gate_hamiltonian(kind, 1.0), spin::collective_j(PauliAxis::z)) <
              1e-13);
    }
    const auto idle = gates::verify_gate(GateKind::idle, 1.0);
    CHECK(idle.max_error == 0.0);
    CHECK(idle.leakage == 0.0);
    CHECK_THROWS_AS(gates::gate_hamiltonian(GateKind::cnot, 0.0), std::invalid_argument);
}

TEST_CASE("hermitian span rank") {
    CHECK(gates::hermitian_span_rank() == 16);
    gates::SpanOptions no_xy;
    no_xy.gxy = false;
    CHECK(gates::hermitian_span_rank(no_xy) == 16);
    gates::SpanOptions bz_only;
    bz_only.gzz = bz_only.gxx = bz_only.gxy = false;
    CHECK(gates::hermitian_span_rank(bz_only) == 4);
}

TEST_CASE("schedule composition") {
    CHECK(max_abs(Operator16(gates::schedule_unitary({}) - Operator16::Identity())) == 0.0);

    const double tau = 1.0;
    gates::CouplingSchedule cnot_once{{tau, gates::gate_coupling(GateKind::cnot, tau)}};
    const Matrix4 restricted = dfs::restrict_to_dfs(gates::schedule_unitary(cnot_once));
    CHECK(max_abs(Matrix4(restricted - gates::target_unitary(GateKind::cnot))) < 1e-12);

    gates::CouplingSchedule eight_t1(8, {tau, gates::gate_coupling(GateKind::t1, tau)});
    CHECK(max_abs(Matrix4(dfs::restrict_to_dfs(gates::schedule_unitary(eight_t1)) - Matrix4::Identity())) <
          1e-12);

    gates::CouplingSchedule two_h1(2, {tau, gates::gate_coupling(GateKind::h1, tau)});
    CHECK(max_abs(Matrix4(dfs::restrict_to_dfs(gates::schedule_unitary(two_h1)) - Matrix4::Identity())) < 1e-12);
}
