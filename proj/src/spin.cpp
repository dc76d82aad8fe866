#include "zeno/spin.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace zeno::spin {

namespace {

// Bit position of qubit n in the basis index (qubit 1 is most significant).
int bit_of(int qubit) { return 4 - qubit; }

}  // namespace

Operator16 identity() { return Operator16::Identity(); }

StateVec16 basis_state(int index) {
    if (index < 0 || index > 15) throw std::invalid_argument("basis_state: index out of range");
    StateVec16 v = StateVec16::Zero();
    v(index) = 1.0;
    return v;
}

Operator16 pauli_op(int qubit, PauliAxis axis) {
    if (qubit < 1 || qubit > 4) throw std::invalid_argument("pauli_op: qubit index must be 1..4");
    const int mask = 1 << bit_of(qubit);
    Operator16 m = Operator16::Zero();
    for (int b = 0; b < 16; ++b) {
        const bool down = (b & mask) != 0;
        switch (axis) {
            case PauliAxis::z:
                m(b, b) = down ? -1.0 : 1.0;
                break;
            case PauliAxis::x:
                m(b ^ mask, b) = 1.0;
                break;
            case PauliAxis::y:
                // sigma_y |up> = i |down>, sigma_y |down> = -i |up>
                m(b ^ mask, b) = down ? cxd(0.0, -1.0) : cxd(0.0, 1.0);
                break;
        }
    }
    return m;
}

Operator16 collective_j(PauliAxis axis) {
    Operator16 j = Operator16::Zero();
    for (int n = 1; n <= 4; ++n) j += pauli_op(n, axis);
    return 0.5 * j;
}

Operator16 ladder(Sign sign) {
    const cxd i(0.0, 1.0);
    if (sign == Sign::plus) return collective_j(PauliAxis::x) + i * collective_j(PauliAxis::y);
    return collective_j(PauliAxis::x) - i * collective_j(PauliAxis::y);
}

Operator16 expm_unitary(const Operator16& h, double t) {
    if (!is_hermitian(h, 1e-12)) throw std::invalid_argument("expm_unitary: Hamiltonian is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Operator16> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("expm_unitary: eigendecomposition failed");
    Eigen::Matrix<cxd, 16, 1> phases;
    for (int k = 0; k < 16; ++k) phases(k) = std::exp(cxd(0.0, -es.eigenvalues()(k) * t));
    Operator16 u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return u;
}

double commutator_norm(const Operator16& a, const Operator16& b) { return (a * b - b * a).norm(); }

}  // namespace zeno::spin
