// types.hpp — Core aliases and error types shared across the library

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace zeno {

using cxd = std::complex<double>;

// Four spin-1/2 qubits, dense 16-dimensional Hilbert space. hbar = 1 throughout.
// Basis convention: qubit 1 is the most significant bit of the 4-bit index,
// bit 0 = spin up, bit 1 = spin down.
using Operator16 = Eigen::Matrix<cxd, 16, 16>;
using StateVec16 = Eigen::Matrix<cxd, 16, 1>;

// Restriction to the 4-dimensional encoded subspace.
using Matrix4 = Eigen::Matrix<cxd, 4, 4>;
using DfsVector = Eigen::Matrix<cxd, 4, 1>;

enum class PauliAxis { x, y, z };
enum class Sign { plus, minus };

inline constexpr int sign_value(Sign s) { return s == Sign::plus ? +1 : -1; }

// Fock truncation or dimension cap cannot accommodate a request.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two quadrature refinement levels disagree beyond tolerance.
struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& msg, double coarse_estimate, double fine_estimate)
        : std::runtime_error(msg), coarse(coarse_estimate), fine(fine_estimate) {}
    double coarse;
    double fine;
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = 1e-13) {
    return max_abs(a - a.adjoint()) <= tol;
}

}  // namespace zeno
