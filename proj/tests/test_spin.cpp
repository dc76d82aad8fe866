#include <doctest.h>

#include "zeno/spin.hpp"

#include <random>

using namespace zeno;
using spin::collective_j;
using spin::ladder;
using spin::pauli_op;

namespace {

Operator16 random_hermitian(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Operator16 a;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) a(i, j) = cxd(u(rng), u(rng));
    return 0.5 * (a + Operator16(a.adjoint()));
}

}  // namespace

TEST_CASE("pauli_z eigenvalue on a product state") {
    // |up up up dn> is basis index 1; qubit 4 is down
    const StateVec16 s = spin::basis_state(1);
    CHECK(max_abs(StateVec16(pauli_op(4, PauliAxis::z) * s + s)) < 1e-15);
    CHECK(max_abs(StateVec16(pauli_op(1, PauliAxis::z) * s - s)) < 1e-15);
}

TEST_CASE("su2 commutation on one qubit, commuting across qubits") {
    const Operator16 sx = pauli_op(1, PauliAxis::x);
    const Operator16 sy = pauli_op(1, PauliAxis::y);
    const Operator16 sz = pauli_op(1, PauliAxis::z);
    CHECK(max_abs(Operator16(sx * sy - sy * sx - cxd(0.0, 2.0) * sz)) < 1e-14);
    const Operator16 sy2 = pauli_op(2, PauliAxis::y);
    CHECK(spin::commutator_norm(sx, sy2) == 0.0);
}

TEST_CASE("pauli product algebra per qubit") {
    // sigma_a sigma_b = delta_ab + i eps_abc sigma_c, checked on every qubit
    const PauliAxis axes[3] = {PauliAxis::x, PauliAxis::y, PauliAxis::z};
    for (int n = 1; n <= 4; ++n) {
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                const Operator16 product = pauli_op(n, axes[a]) * pauli_op(n, axes[b]);
                Operator16 expected = Operator16::Zero();
                if (a == b) {
                    expected = Operator16::Identity();
                } else {
                    const int c = 3 - a - b;
                    const double parity = (b - a + 3) % 3 == 1 ? 1.0 : -1.0;
                    expected = cxd(0.0, parity) * pauli_op(n, axes[c]);
                }
                CHECK(max_abs(Operator16(product - expected)) < 1e-14);
            }
        CHECK(std::abs(pauli_op(n, PauliAxis::x).trace()) < 1e-15);
    }
}

TEST_CASE("pauli_op rejects out-of-range qubits") {
    CHECK_THROWS_AS(pauli_op(0, PauliAxis::x), std::invalid_argument);
    CHECK_THROWS_AS(pauli_op(5, PauliAxis::z), std::invalid_argument);
}

TEST_CASE("collective J_z spectrum and action") {
    const Operator16 jz = collective_j(PauliAxis::z);
    const StateVec16 s = spin::basis_state(1);  // three up, one down
    CHECK(max_abs(StateVec16(jz * s - s)) < 1e-15);

    // diagonal entries follow the popcount rule, eigenvalue +1 has multiplicity 4
    int plus_one = 0;
    for (int b = 0; b < 16; ++b) {
        const int downs = __builtin_popcount(static_cast<unsigned>(b));
        CHECK(std::abs(jz(b, b) - cxd((4.0 - 2.0 * downs) / 2.0, 0.0)) < 1e-15);
        if (downs == 1) ++plus_one;
    }
    CHECK(plus_one == 4);
}

TEST_CASE("ladder operators") {
    const Operator16 jx = collective_j(PauliAxis::x);
    const Operator16 jz = collective_j(PauliAxis::z);
    const Operator16 jp = ladder(Sign::plus);
    const Operator16 jm = ladder(Sign::minus);

    CHECK(max_abs(Operator16(jx - 0.5 * (jp + jm))) < 1e-14);
    CHECK(max_abs(Operator16(jz * jp - jp * jz - jp)) < 1e-14);
    CHECK(max_abs(StateVec16(jp * spin::basis_state(0))) < 1e-15);  // highest weight

    // From M_z = +1, three lowerings reach M_z = -2 and the fourth annihilates
    for (int b : {1, 2, 4, 8}) {
        StateVec16 s = spin::basis_state(b);
        for (int k = 0; k < 3; ++k) {
            s = jm * s;
            CHECK(s.norm() > 1e-12);
        }
        CHECK(max_abs(StateVec16(jm * s)) < 1e-12);
    }
}

TEST_CASE("expm_unitary basics") {
    CHECK(max_abs(Operator16(spin::expm_unitary(Operator16::Zero(), 3.7) - Operator16::Identity())) < 1e-15);

    Operator16 bad = Operator16::Zero();
    bad(0, 1) = 1.0;  // not Hermitian
    CHECK_THROWS_AS(spin::expm_unitary(bad, 1.0), std::invalid_argument);
}

TEST_CASE("expm_unitary group law and unitarity over random Hermitians") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        const Operator16 h = random_hermitian(rng);
        std::uniform_real_distribution<double> u(0.1, 2.0);
        const double t1 = u(rng), t2 = u(rng);
        const Operator16 u1 = spin::expm_unitary(h, t1);
        const Operator16 u2 = spin::expm_unitary(h, t2);
        const Operator16 u12 = spin::expm_unitary(h, t1 + t2);
        CHECK(max_abs(Operator16(u1 * u2 - u12)) < 1e-12);
        CHECK(max_abs(Operator16(u1.adjoint() * u1 - Operator16::Identity())) < 1e-12);
    }
}

TEST_CASE("commutator norms") {
    const Operator16 jz = collective_j(PauliAxis::z);
    const Operator16 jx = collective_j(PauliAxis::x);
    const Operator16 jy = collective_j(PauliAxis::y);
    CHECK(spin::commutator_norm(jz, Operator16(jz * jz)) == 0.0);
    // [J_x, J_z] = -i J_y, so the norms agree
    CHECK(std::abs(spin::commutator_norm(jx, jz) - jy.norm()) < 1e-13);
}
