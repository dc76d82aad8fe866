#include "zeno/oracle.hpp"

#include "zeno/dfs.hpp"
#include "zeno/spin.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace zeno::oracle {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return k;
}

Eigen::MatrixXcd annihilation(int dim) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

// Truncated bath space: kron product over modes, mode 0 most significant.
struct BathSpace {
    explicit BathSpace(const std::vector<bath::Mode>& modes_, int n_max_) : modes(modes_), n_max(n_max_) {
        if (n_max < 1) throw std::invalid_argument("FockTruncation: n_max must be >= 1");
        if (modes.empty()) throw std::invalid_argument("FockTruncation: at least one mode required");
        level_dim = n_max + 1;
        dim = 1;
        for (std::size_t k = 0; k < modes.size(); ++k) dim *= level_dim;
    }

    Eigen::MatrixXcd mode_op(std::size_t k, const Eigen::MatrixXcd& local) const {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
        for (std::size_t j = 0; j < modes.size(); ++j)
            out = kron(out, j == k ? local : Eigen::MatrixXcd::Identity(level_dim, level_dim));
        return out;
    }

    Eigen::MatrixXcd environment_hamiltonian() const {
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
        const Eigen::MatrixXcd a = annihilation(level_dim);
        const Eigen::MatrixXcd n = a.adjoint() * a;
        for (std::size_t k = 0; k < modes.size(); ++k) h += modes[k].omega * mode_op(k, n);
        return h;
    }

    Eigen::MatrixXcd coupling_quadrature() const {  // sum_k g_k (a_k + a_k^dag)
        Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
        const Eigen::MatrixXcd a = annihilation(level_dim);
        const Eigen::MatrixXcd x = a + Eigen::MatrixXcd(a.adjoint());
        for (std::size_t k = 0; k < modes.size(); ++k) b += modes[k].g * mode_op(k, x);
        return b;
    }

    Eigen::MatrixXcd gamma_op(double t, double lambda) const {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
        const Eigen::MatrixXcd a = annihilation(level_dim);
        for (std::size_t k = 0; k < modes.size(); ++k) {
            const cxd f = bath::f_amp(modes[k].omega, t, bath::BathParams{lambda}, modes[k].g);
            g += mode_op(k, Eigen::MatrixXcd(f * a.adjoint() - std::conj(f) * a));
        }
        return g;
    }

    int occupation(Eigen::Index basis_index, std::size_t k) const {
        Eigen::Index stride = 1;
        for (std::size_t j = modes.size() - 1; j > k; --j) stride *= level_dim;
        return static_cast<int>((basis_index / stride) % level_dim);
    }

    std::vector<bath::Mode> modes;
    int n_max;
    int level_dim;
    Eigen::Index dim;
};

// exp(g) for anti-Hermitian g, through the Hermitian eigendecomposition of i g.
Eigen::MatrixXcd expm_antihermitian(const Eigen::MatrixXcd& g) {
    const Eigen::MatrixXcd h = cxd(0.0, 1.0) * g;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("expm_antihermitian: eigendecomposition failed");
    Eigen::VectorXcd phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::exp(cxd(0.0, -es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

BathSpace make_bath_space(const FockTruncation& trunc) {
    BathSpace space(trunc.modes, trunc.n_max);
    if (static_cast<std::size_t>(16 * space.dim) > trunc.dimension_cap)
        throw ResourceError("FockTruncation: joint dimension " + std::to_string(16 * space.dim) +
                            " exceeds cap " + std::to_string(trunc.dimension_cap));
    return space;
}

}  // namespace

Eigen::Index joint_dimension(const FockTruncation& trunc) { return 16 * make_bath_space(trunc).dim; }

Eigen::MatrixXcd build_full_hamiltonian(gates::GateKind gate, double tau, double epsilon, double lambda,
                                        const FockTruncation& trunc) {
    const BathSpace space = make_bath_space(trunc);
    const Eigen::MatrixXcd identity_bath = Eigen::MatrixXcd::Identity(space.dim, space.dim);
    const Eigen::MatrixXcd h0 = gate == gates::GateKind::idle ? Operator16(Operator16::Zero())
                                                              : gates::gate_hamiltonian(gate, tau);
    Eigen::MatrixXcd h = kron(h0, identity_bath);
    h += kron(Eigen::MatrixXcd(Operator16(Operator16::Identity())), space.environment_hamiltonian());
    h += lambda * kron(Eigen::MatrixXcd(spin::collective_j(PauliAxis::z)), space.coupling_quadrature());
    h += epsilon * kron(Eigen::MatrixXcd(spin::collective_j(PauliAxis::x)), identity_bath);
    return h;
}

ExactEvolver::ExactEvolver(gates::GateKind gate, double tau, double epsilon, double lambda,
                           const FockTruncation& trunc, const DfsVector& phi0) {
    const BathSpace space = make_bath_space(trunc);
    bath_dim_ = space.dim;

    const Eigen::MatrixXcd h_full = build_full_hamiltonian(gate, tau, epsilon, lambda, trunc);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_full(h_full);
    if (es_full.info() != Eigen::Success) throw std::runtime_error("ExactEvolver: full eigensolve failed");
    full_energies_ = es_full.eigenvalues();
    full_vectors_ = es_full.eigenvectors();

    // Measurement frame: H_E + lambda J_z B, the generator of the paper-frame
    // unitary the interaction picture divides out.
    Eigen::MatrixXcd h_frame =
        kron(Eigen::MatrixXcd(Operator16(Operator16::Identity())), space.environment_hamiltonian());
    h_frame += lambda * kron(Eigen::MatrixXcd(spin::collective_j(PauliAxis::z)), space.coupling_quadrature());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_frame(h_frame);
    if (es_frame.info() != Eigen::Success) throw std::runtime_error("ExactEvolver: frame eigensolve failed");
    frame_energies_ = es_frame.eigenvalues();
    frame_vectors_ = es_frame.eigenvectors();

    const Operator16 h_gate =
        gate == gates::GateKind::idle ? Operator16(Operator16::Zero()) : gates::gate_hamiltonian(gate, tau);
    Eigen::SelfAdjointEigenSolver<Operator16> es_gate(h_gate);
    gate_energies_ = es_gate.eigenvalues();
    gate_vectors_ = es_gate.eigenvectors();

    phi0_16_ = dfs::encode(phi0);
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(16 * space.dim);
    for (int s = 0; s < 16; ++s) psi0(s * space.dim) = phi0_16_(s);  // vacuum bath factor
    initial_full_ = full_vectors_.adjoint() * psi0;

    top_level_mask_.assign(static_cast<std::size_t>(space.dim), 0.0);
    for (Eigen::Index b = 0; b < space.dim; ++b)
        for (std::size_t k = 0; k < space.modes.size(); ++k)
            if (space.occupation(b, k) == space.n_max) top_level_mask_[static_cast<std::size_t>(b)] = 1.0;
}

double ExactEvolver::fidelity(double t) const {
    Eigen::VectorXcd coeff = initial_full_;
    for (Eigen::Index i = 0; i < coeff.size(); ++i) coeff(i) *= std::exp(cxd(0.0, -full_energies_(i) * t));
    Eigen::VectorXcd psi = full_vectors_ * coeff;

    const double norm_drift = std::abs(psi.norm() - 1.0);
    if (norm_drift > 1e-10)
        throw ResourceError("ExactEvolver: norm drift " + std::to_string(norm_drift) + "; increase n_max");
    double top_weight = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i)
        top_weight += top_level_mask_[static_cast<std::size_t>(i % bath_dim_)] * std::norm(psi(i));
    if (top_weight > 1e-8)
        throw ResourceError("ExactEvolver: top Fock level weight " + std::to_string(top_weight) +
                            "; increase n_max");

    // Undo the measurement frame, then the gate frame.
    Eigen::VectorXcd frame_coeff = frame_vectors_.adjoint() * psi;
    for (Eigen::Index i = 0; i < frame_coeff.size(); ++i)
        frame_coeff(i) *= std::exp(cxd(0.0, frame_energies_(i) * t));
    psi = frame_vectors_ * frame_coeff;

    Eigen::Map<Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> as_matrix(psi.data(), 16,
                                                                                              bath_dim_);
    Eigen::Matrix<cxd, 16, 1> gate_phases;
    for (int k = 0; k < 16; ++k) gate_phases(k) = std::exp(cxd(0.0, gate_energies_(k) * t));
    const Eigen::Matrix<cxd, 16, 16> u0_dagger =
        gate_vectors_ * gate_phases.asDiagonal() * gate_vectors_.adjoint();
    const Eigen::MatrixXcd interaction = u0_dagger * as_matrix;

    return (phi0_16_.adjoint() * interaction).squaredNorm();
}

double exact_fidelity(double t, gates::GateKind gate, double tau, double epsilon, double lambda,
                      const FockTruncation& trunc, const DfsVector& phi0) {
    return ExactEvolver(gate, tau, epsilon, lambda, trunc, phi0).fidelity(t);
}

double exact_fidelity_nobath(double t, gates::GateKind gate, double tau, double epsilon, const DfsVector& phi0) {
    const Operator16 h0 =
        gate == gates::GateKind::idle ? Operator16(Operator16::Zero()) : gates::gate_hamiltonian(gate, tau);
    const Operator16 h = h0 + epsilon * spin::collective_j(PauliAxis::x);
    const StateVec16 psi0 = dfs::encode(phi0);
    const StateVec16 evolved = spin::expm_unitary(h0, -t) * (spin::expm_unitary(h, t) * psi0);
    return std::norm(psi0.dot(evolved));
}

double verify_eq_t4(double t, double lambda, const FockTruncation& trunc) {
    const BathSpace space = make_bath_space(trunc);
    const bath::BathParams bp{lambda};

    // Displacement leakage guard on the compared sub-block (occupations <= n_max/2):
    // the Poisson tail mass of |f_k|^2 beyond the block boundary must be negligible.
    const int n_block = space.n_max / 2;
    for (const bath::Mode& m : space.modes) {
        const double mu = std::norm(bath::f_amp(m.omega, t, bp, m.g));
        double cumulative = 0.0, term = std::exp(-mu);
        for (int n = 0; n <= n_block; ++n) {
            cumulative += term;
            term *= mu / (n + 1);
        }
        if (1.0 - cumulative > 1e-8)
            throw std::invalid_argument("verify_eq_t4: displacement leakage too large for this truncation");
    }

    const Eigen::MatrixXcd identity_bath = Eigen::MatrixXcd::Identity(space.dim, space.dim);
    const Eigen::MatrixXcd jz = kron(Eigen::MatrixXcd(spin::collective_j(PauliAxis::z)), identity_bath);
    const Eigen::MatrixXcd jx = kron(Eigen::MatrixXcd(spin::collective_j(PauliAxis::x)), identity_bath);

    Eigen::MatrixXcd h_frame =
        kron(Eigen::MatrixXcd(Operator16(Operator16::Identity())), space.environment_hamiltonian());
    h_frame += lambda * kron(Eigen::MatrixXcd(spin::collective_j(PauliAxis::z)), space.coupling_quadrature());
    const Eigen::MatrixXcd u = expm_antihermitian(Eigen::MatrixXcd(cxd(0.0, -t) * h_frame));
    const Eigen::MatrixXcd lhs = u.adjoint() * jx * u;

    const bath::SpectralModel spec = bath::SpectralModel::discrete(space.modes);
    const double a = bath::alpha(t, bp, spec);
    const Eigen::MatrixXcd gamma_joint = kron(Eigen::MatrixXcd(Operator16(Operator16::Identity())),
                                              space.gamma_op(t, lambda));
    const Eigen::MatrixXcd exponent = gamma_joint - cxd(0.0, 2.0 * a) * jz;
    const Eigen::MatrixXcd jp = kron(Eigen::MatrixXcd(spin::ladder(Sign::plus)), identity_bath);
    const Eigen::MatrixXcd jm = kron(Eigen::MatrixXcd(spin::ladder(Sign::minus)), identity_bath);
    const Eigen::MatrixXcd rhs = 0.5 * std::exp(cxd(0.0, a)) *
                                 (expm_antihermitian(exponent) * jp + expm_antihermitian(Eigen::MatrixXcd(-exponent)) * jm);

    // Restrict the comparison to rows/columns whose every mode occupation stays
    // within the guarded block.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index j = 0; j < 16 * space.dim; ++j) {
        const Eigen::Index b = j % space.dim;
        bool inside = true;
        for (std::size_t k = 0; k < space.modes.size(); ++k)
            if (space.occupation(b, k) > n_block) inside = false;
        if (inside) keep.push_back(j);
    }
    double max_error = 0.0;
    for (Eigen::Index r : keep)
        for (Eigen::Index c : keep) max_error = std::max(max_error, std::abs(lhs(r, c) - rhs(r, c)));
    return max_error;
}

cxd vacuum_correlation_fock(Sign a, Sign b, double t1, double t2, double lambda,
                            const std::vector<bath::Mode>& modes, int n_max) {
    const BathSpace space(modes, n_max);
    const Eigen::MatrixXcd u1 = expm_antihermitian(
        Eigen::MatrixXcd(static_cast<double>(sign_value(a)) * space.gamma_op(t1, lambda)));
    const Eigen::MatrixXcd u2 = expm_antihermitian(
        Eigen::MatrixXcd(static_cast<double>(sign_value(b)) * space.gamma_op(t2, lambda)));
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(space.dim);
    vac(0) = 1.0;
    return vac.dot(u1 * (u2 * vac));
}

}  // namespace zeno::oracle
