// spin.hpp — Pauli and collective angular-momentum operators on four qubits

#pragma once

#include "zeno/types.hpp"

namespace zeno::spin {

Operator16 identity();
StateVec16 basis_state(int index);

// sigma_axis on qubit n (1..4), identity elsewhere. Throws std::invalid_argument
// for n outside 1..4.
Operator16 pauli_op(int qubit, PauliAxis axis);

// J_axis = (1/2) sum_n pauli_op(n, axis). J_z is diagonal with eigenvalues
// {-2,-1,0,+1,+2}; the encoded subspace lives in the +1 sector.
Operator16 collective_j(PauliAxis axis);

// J± = J_x ± i J_y; [J_z, J±] = ±J±.
Operator16 ladder(Sign sign);

// exp(-i h t) via Hermitian eigendecomposition. h must be Hermitian within
// 1e-12 or std::invalid_argument is thrown; the result is unitary within 1e-12.
Operator16 expm_unitary(const Operator16& h, double t);

// Frobenius norm of [a, b].
double commutator_norm(const Operator16& a, const Operator16& b);

}  // namespace zeno::spin
