#include "zeno/dfs.hpp"

#include <cmath>
#include <stdexcept>

namespace zeno::dfs {

std::array<int, 4> basis_indices() { return {1, 2, 4, 8}; }

StateVec16 encode(const DfsVector& v, bool auto_normalize) {
    DfsVector w = v;
    const double n = w.norm();
    if (auto_normalize) {
        if (n == 0.0) throw std::invalid_argument("encode: cannot normalize the zero vector");
        w /= n;
    } else if (std::abs(n - 1.0) > 1e-12) {
        throw std::invalid_argument("encode: state is not normalized");
    }
    StateVec16 s = StateVec16::Zero();
    const auto idx = basis_indices();
    for (int i = 0; i < 4; ++i) s(idx[i]) = w(i);
    return s;
}

Decoded decode(const StateVec16& s) {
    Decoded d;
    const auto idx = basis_indices();
    for (int i = 0; i < 4; ++i) d.amplitudes(i) = s(idx[i]);
    d.leak = s.squaredNorm() - d.amplitudes.squaredNorm();
    if (d.leak < 0.0) d.leak = 0.0;  // roundoff guard
    return d;
}

Matrix4 restrict_to_dfs(const Operator16& a) {
    Matrix4 b;
    const auto idx = basis_indices();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b(i, j) = a(idx[i], idx[j]);
    return b;
}

Operator16 projector() {
    Operator16 p = Operator16::Zero();
    for (int i : basis_indices()) p(i, i) = 1.0;
    return p;
}

DfsVector default_initial_state() {
    DfsVector v;
    v << -1.0, 0.0, 1.0, 0.0;
    return v / std::sqrt(2.0);
}

}  // namespace zeno::dfs
