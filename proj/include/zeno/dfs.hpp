// dfs.hpp — The M_z = +1 encoded subspace: basis, encode/decode, restriction

#pragma once

#include "zeno/types.hpp"

#include <array>

namespace zeno::dfs {

// Computational-basis indices of the ordered encoded basis
// (|up up up dn>, |up up dn up>, |up dn up up>, |dn up up up>)
//  = (|0,0>, |0,1>, |1,0>, |1,1>) for the two abstract qubits.
std::array<int, 4> basis_indices();

// Lift a two-abstract-qubit state to the physical 16-dim space. Requires
// ||v|| = 1 within 1e-12 unless auto_normalize is set.
StateVec16 encode(const DfsVector& v, bool auto_normalize = false);

struct Decoded {
    DfsVector amplitudes;  // unnormalized subspace amplitudes
    double leak;           // squared norm outside the subspace
};

// Never errors: perturbed dynamics legitimately leaks.
Decoded decode(const StateVec16& s);

// B_ij = <basis_i| a |basis_j> in the ordered encoded basis.
Matrix4 restrict_to_dfs(const Operator16& a);

// P = sum_i |basis_i><basis_i|.
Operator16 projector();

// (|1,0> - |0,0>)/sqrt(2)
DfsVector default_initial_state();

}  // namespace zeno::dfs
