#include <doctest.h>

#include "zeno/dfs.hpp"
#include "zeno/gates.hpp"
#include "zeno/spin.hpp"

#include <random>

using namespace zeno;

TEST_CASE("encoded basis indices") {
    const auto idx = dfs::basis_indices();
    CHECK(idx == std::array<int, 4>{1, 2, 4, 8});
    for (int i : idx) CHECK(__builtin_popcount(static_cast<unsigned>(i)) == 1);
}

TEST_CASE("encode places amplitudes and stays in the M_z = +1 sector") {
    DfsVector one_zero = DfsVector::Zero();
    one_zero(2) = 1.0;
    CHECK(max_abs(StateVec16(dfs::encode(one_zero) - spin::basis_state(4))) < 1e-15);

    const StateVec16 s = dfs::encode(dfs::default_initial_state());
    StateVec16 expected = StateVec16::Zero();
    expected(4) = 1.0 / std::sqrt(2.0);
    expected(1) = -1.0 / std::sqrt(2.0);
    CHECK(max_abs(StateVec16(s - expected)) < 1e-15);

    const Operator16 jz = spin::collective_j(PauliAxis::z);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        DfsVector v;
        for (int i = 0; i < 4; ++i) v(i) = cxd(u(rng), u(rng));
        v.normalize();
        const StateVec16 enc = dfs::encode(v);
        CHECK(max_abs(StateVec16(jz * enc - enc)) < 1e-14);
    }
}

TEST_CASE("encode validates normalization unless asked not to") {
    DfsVector v = DfsVector::Zero();
    v(0) = 2.0;
    CHECK_THROWS_AS(dfs::encode(v), std::invalid_argument);
    const StateVec16 s = dfs::encode(v, true);
    CHECK(std::abs(s.norm() - 1.0) < 1e-15);
}

TEST_CASE("decode round trip and leakage accounting") {
    DfsVector v;
    v << cxd(0.4, 0.1), cxd(-0.3, 0.2), cxd(0.5, -0.5), cxd(0.1, 0.4);
    v.normalize();
    const auto round = dfs::decode(dfs::encode(v));
    CHECK(max_abs(DfsVector(round.amplitudes - v)) < 1e-15);
    CHECK(round.leak < 1e-15);

    const auto outside = dfs::decode(spin::basis_state(0));  // |up up up up>
    CHECK(max_abs(outside.amplitudes) < 1e-15);
    CHECK(outside.leak == doctest::Approx(1.0).epsilon(1e-14));

    // J_x maps the sector entirely outside, so the leak is the full norm
    const StateVec16 pushed = spin::collective_j(PauliAxis::x) * dfs::encode(v);
    const auto leaked = dfs::decode(pushed);
    CHECK(max_abs(leaked.amplitudes) < 1e-14);
    CHECK(leaked.leak == doctest::Approx(pushed.squaredNorm()).epsilon(1e-12));
}

TEST_CASE("restriction of diagnostic operators") {
    Operator16 sum_sz = Operator16::Zero();
    for (int n = 1; n <= 4; ++n) sum_sz += spin::pauli_op(n, PauliAxis::z);
    CHECK(max_abs(Matrix4(dfs::restrict_to_dfs(sum_sz) - 2.0 * Matrix4::Identity())) < 1e-15);

    const double tau = 0.8;
    const Matrix4 t1 = dfs::restrict_to_dfs(gates::gate_hamiltonian(gates::GateKind::t1, tau));
    Matrix4 expected = Matrix4::Zero();
    expected(2, 2) = expected(3, 3) = -std::numbers::pi / 4.0 / tau;
    CHECK(max_abs(Matrix4(t1 - expected)) < 1e-14);

    CHECK(max_abs(dfs::restrict_to_dfs(spin::collective_j(PauliAxis::x))) < 1e-15);
    CHECK(max_abs(dfs::restrict_to_dfs(spin::collective_j(PauliAxis::y))) < 1e-15);
}

TEST_CASE("projector identities and gate confinement") {
    const Operator16 p = dfs::projector();
    CHECK(max_abs(Operator16(p * p - p)) < 1e-15);
    CHECK(max_abs(Operator16(p - p.adjoint())) < 1e-15);
    CHECK(std::abs(p.trace() - cxd(4.0, 0.0)) < 1e-15);
    CHECK(spin::commutator_norm(p, spin::collective_j(PauliAxis::z)) < 1e-15);

    for (auto kind : {gates::GateKind::cnot, gates::GateKind::t1, gates::GateKind::t2, gates::GateKind::h1,
                      gates::GateKind::h2}) {
        const Operator16 u = spin::expm_unitary(gates::gate_hamiltonian(kind, 1.0), 1.0);
        CHECK(((Operator16::Identity() - p) * u * p).norm() < 1e-12);
    }
}
