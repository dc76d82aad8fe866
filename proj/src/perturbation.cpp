#include "zeno/perturbation.hpp"

#include "zeno/parallel.hpp"
#include "zeno/spin.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace zeno::pt {

namespace {

constexpr double pi = std::numbers::pi;

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    if (n < 1 || n > 16) throw std::invalid_argument("gauss_legendre: supported orders are 1..16");
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double xi = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = xi;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            const double dx = p1 / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = xi;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
    // cos ordering is descending; flip to ascending abscissas
    std::reverse(x.begin(), x.end());
    std::reverse(w.begin(), w.end());
}

Operator16 gate_generator(gates::GateKind gate, double tau) {
    if (gate == gates::GateKind::idle) return Operator16::Zero();
    return gates::gate_hamiltonian(gate, tau);
}

}  // namespace

// ---------------------------------------------------------------------------
// ChiEvaluator
// ---------------------------------------------------------------------------

ChiEvaluator::ChiEvaluator(const Operator16& hamiltonian, const DfsVector& phi0) {
    Segment seg;
    seg.start = 0.0;
    Eigen::SelfAdjointEigenSolver<Operator16> es(hamiltonian);
    if (es.info() != Eigen::Success) throw std::runtime_error("ChiEvaluator: eigendecomposition failed");
    seg.vectors = es.eigenvectors();
    seg.energies = es.eigenvalues();
    seg.prefix = Operator16::Identity();
    segments_.push_back(seg);
    total_duration_ = std::numeric_limits<double>::infinity();
    phi0_16_ = dfs::encode(phi0);
    j_plus_ = spin::ladder(Sign::plus);
    j_minus_ = spin::ladder(Sign::minus);
    spread_ = seg.energies.maxCoeff() - seg.energies.minCoeff();
}

ChiEvaluator::ChiEvaluator(const gates::CouplingSchedule& schedule, const DfsVector& phi0) {
    double start = 0.0;
    Operator16 prefix = Operator16::Identity();
    for (const auto& piece : schedule) {
        if (!(piece.duration > 0.0)) throw std::invalid_argument("ChiEvaluator: durations must be positive");
        Segment seg;
        seg.start = start;
        const Operator16 h = gates::build_commuting(piece.coupling);
        Eigen::SelfAdjointEigenSolver<Operator16> es(h);
        if (es.info() != Eigen::Success) throw std::runtime_error("ChiEvaluator: eigendecomposition failed");
        seg.vectors = es.eigenvectors();
        seg.energies = es.eigenvalues();
        seg.prefix = prefix;
        segments_.push_back(seg);
        spread_ = std::max(spread_, seg.energies.maxCoeff() - seg.energies.minCoeff());
        prefix = spin::expm_unitary(h, piece.duration) * prefix;
        start += piece.duration;
    }
    total_duration_ = start;
    final_unitary_ = prefix;
    phi0_16_ = dfs::encode(phi0);
    j_plus_ = spin::ladder(Sign::plus);
    j_minus_ = spin::ladder(Sign::minus);
}

Operator16 ChiEvaluator::u0(double t) const {
    if (t < 0.0) throw std::invalid_argument("ChiEvaluator: time must be nonnegative");
    if (segments_.empty() || t >= total_duration_) return final_unitary_;
    std::size_t j = segments_.size();
    while (j > 0 && segments_[j - 1].start > t) --j;
    const Segment& seg = segments_[j - 1];
    Eigen::Matrix<cxd, 16, 1> phases;
    for (int k = 0; k < 16; ++k) phases(k) = std::exp(cxd(0.0, -seg.energies(k) * (t - seg.start)));
    return seg.vectors * phases.asDiagonal() * seg.vectors.adjoint() * seg.prefix;
}

StateVec16 ChiEvaluator::chi(Sign sign, double t) const {
    const Operator16 u = u0(t);
    const StateVec16 moved = u * phi0_16_;
    return u.adjoint() * ((sign == Sign::plus ? j_plus_ : j_minus_) * moved);
}

// ---------------------------------------------------------------------------
// Kernel
// ---------------------------------------------------------------------------

Kernel::Kernel(const PerturbationParams& p)
    : params_(p), chi_(gate_generator(p.gate, p.tau), p.phi0), bath_{p.lambda} {
    if (p.epsilon < 0.0) throw std::invalid_argument("PerturbationParams: epsilon must be nonnegative");
}

cxd Kernel::gamma_pp(double t1, double t2) const {
    const double da = bath::alpha(t1, bath_, params_.spectrum) - bath::alpha(t2, bath_, params_.spectrum);
    return 0.25 * std::exp(cxd(0.0, 3.0 * da)) * chi_.chi(Sign::plus, t1).dot(chi_.chi(Sign::plus, t2));
}

cxd Kernel::gamma_mm(double t1, double t2) const {
    const double da = bath::alpha(t1, bath_, params_.spectrum) - bath::alpha(t2, bath_, params_.spectrum);
    return 0.25 * std::exp(cxd(0.0, -da)) * chi_.chi(Sign::minus, t1).dot(chi_.chi(Sign::minus, t2));
}

cxd Kernel::gamma_pm(double t1, double t2) const {
    const double a1 = bath::alpha(t1, bath_, params_.spectrum);
    const double a2 = bath::alpha(t2, bath_, params_.spectrum);
    return 0.25 * std::exp(cxd(0.0, 3.0 * a1 + a2)) * chi_.chi(Sign::plus, t1).dot(chi_.chi(Sign::minus, t2));
}

cxd Kernel::gamma_mp(double t1, double t2) const {
    const double a1 = bath::alpha(t1, bath_, params_.spectrum);
    const double a2 = bath::alpha(t2, bath_, params_.spectrum);
    return 0.25 * std::exp(cxd(0.0, -(a1 + 3.0 * a2))) * chi_.chi(Sign::minus, t1).dot(chi_.chi(Sign::plus, t2));
}

cxd Kernel::operator()(double t1, double t2) const {
    const double eps2 = params_.epsilon * params_.epsilon;
    const cxd c_mp = bath::vacuum_correlation(Sign::minus, Sign::plus, t1, t2, bath_, params_.spectrum);
    const cxd c_pm = bath::vacuum_correlation(Sign::plus, Sign::minus, t1, t2, bath_, params_.spectrum);
    return eps2 * (gamma_pp(t1, t2) * c_mp + gamma_mm(t1, t2) * c_pm);
}

// ---------------------------------------------------------------------------
// Curve integration
// ---------------------------------------------------------------------------

namespace {

// One curve's immutable per-node data, laid out for the pair sweep.
struct NodeSet {
    std::vector<double> t, w, alpha, np2_p, np2_m;
    std::vector<StateVec16, Eigen::aligned_allocator<StateVec16>> chi_p, chi_m;
    std::vector<cxd> f;  // node-major, modes_per_node entries each
    std::size_t modes_per_node = 0;
    std::size_t size() const { return t.size(); }
};

struct PairContext {
    bool continuum = false;
    bath::BathParams bp{};
    bath::SpectralModel spectrum = bath::SpectralModel::continuum(1.0);
    double eps2 = 0.0;
};

// K(t_b, t_a) for node indices b >= a (t ascending with index).
cxd kernel_pair(const PairContext& ctx, const NodeSet& n, std::size_t b, std::size_t a) {
    const double da = n.alpha[b] - n.alpha[a];
    cxd gamma_sum(0.0, 0.0);
    if (n.np2_p[b] * n.np2_p[a] > 1e-40)
        gamma_sum += 0.25 * std::exp(cxd(0.0, 3.0 * da)) * n.chi_p[b].dot(n.chi_p[a]);
    gamma_sum += 0.25 * std::exp(cxd(0.0, -da)) * n.chi_m[b].dot(n.chi_m[a]);

    double u, v;
    if (ctx.continuum) {
        u = bath::overlap_s(n.t[b], n.t[a], Sign::minus, ctx.bp, ctx.spectrum);
        v = bath::overlap_phase(n.t[b], n.t[a], ctx.bp, ctx.spectrum);
    } else {
        u = 0.0;
        v = 0.0;
        const cxd* fb = n.f.data() + b * n.modes_per_node;
        const cxd* fa = n.f.data() + a * n.modes_per_node;
        for (std::size_t k = 0; k < n.modes_per_node; ++k) {
            u += std::norm(fb[k] - fa[k]);
            v += std::imag(fb[k] * std::conj(fa[k]));
        }
    }
    return ctx.eps2 * gamma_sum * std::exp(cxd(-0.5 * u, -v));
}

double kernel_diagonal(const PairContext& ctx, const NodeSet& n, std::size_t b) {
    return ctx.eps2 * 0.25 * (n.np2_p[b] + n.np2_m[b]);
}

std::vector<double> boundaries_from(const std::vector<double>& abs_times) {
    std::vector<double> b;
    b.push_back(0.0);
    for (double t : abs_times)
        if (t > b.back()) b.push_back(t);
    return b;
}

// Fidelity at every abs_times entry with one composite rule of the given step.
std::vector<double> run_level(const PerturbationParams& p, const ChiEvaluator& chi, const std::vector<double>& abs_times,
                              double step, int gauss_points, int threads) {
    std::vector<double> gx, gw;
    gauss_legendre(gauss_points, gx, gw);

    const std::vector<double> bounds = boundaries_from(abs_times);
    NodeSet nodes;
    std::vector<std::size_t> count_at_bound(bounds.size(), 0);
    for (std::size_t i = 1; i < bounds.size(); ++i) {
        const double len = bounds[i] - bounds[i - 1];
        const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(len / step - 1e-9)));
        const double width = len / static_cast<double>(panels);
        for (std::size_t q = 0; q < panels; ++q) {
            const double left = bounds[i - 1] + width * static_cast<double>(q);
            for (int k = 0; k < gauss_points; ++k) {
                nodes.t.push_back(left + 0.5 * width * (gx[static_cast<std::size_t>(k)] + 1.0));
                nodes.w.push_back(0.5 * width * gw[static_cast<std::size_t>(k)]);
            }
        }
        count_at_bound[i] = nodes.t.size();
    }

    const std::size_t n = nodes.size();
    nodes.alpha.resize(n);
    nodes.np2_p.resize(n);
    nodes.np2_m.resize(n);
    nodes.chi_p.resize(n);
    nodes.chi_m.resize(n);
    const bath::BathParams bp{p.lambda};
    PairContext ctx;
    ctx.continuum = p.spectrum.is_continuum;
    ctx.bp = bp;
    ctx.spectrum = p.spectrum;
    ctx.eps2 = p.epsilon * p.epsilon;
    if (!p.spectrum.is_continuum) {
        nodes.modes_per_node = p.spectrum.modes.size();
        nodes.f.resize(n * nodes.modes_per_node);
    }
    parallel_for(0, n, threads, [&](std::size_t i) {
        nodes.alpha[i] = bath::alpha(nodes.t[i], bp, p.spectrum);
        nodes.chi_p[i] = chi.chi(Sign::plus, nodes.t[i]);
        nodes.chi_m[i] = chi.chi(Sign::minus, nodes.t[i]);
        nodes.np2_p[i] = nodes.chi_p[i].squaredNorm();
        nodes.np2_m[i] = nodes.chi_m[i].squaredNorm();
        for (std::size_t k = 0; k < nodes.modes_per_node; ++k)
            nodes.f[i * nodes.modes_per_node + k] =
                bath::f_amp(p.spectrum.modes[k].omega, nodes.t[i], bp, p.spectrum.modes[k].g);
    });

    // Cumulative sweep: F(T) = 1 - sum_{a,b <= A(T)} w_a w_b K, accumulated one
    // strip of new nodes per grid boundary. Each new node's contribution is
    // computed independently and combined in index order, so any thread count
    // yields identical bits.
    std::vector<double> fidelity_at_bound(bounds.size(), 1.0);
    double integral = 0.0;
    std::size_t done = 0;
    std::vector<double> delta;
    for (std::size_t i = 1; i < bounds.size(); ++i) {
        const std::size_t end = count_at_bound[i];
        delta.assign(end - done, 0.0);
        parallel_for(done, end, threads, [&](std::size_t b) {
            cxd inner(0.0, 0.0);
            for (std::size_t a = 0; a < b; ++a) inner += nodes.w[a] * kernel_pair(ctx, nodes, b, a);
            delta[b - done] =
                nodes.w[b] * nodes.w[b] * kernel_diagonal(ctx, nodes, b) + 2.0 * nodes.w[b] * inner.real();
        });
        for (double d : delta) integral += d;
        fidelity_at_bound[i] = 1.0 - integral;
        done = end;
    }

    // Map each requested time to its boundary (duplicates share a boundary).
    std::vector<double> out(abs_times.size(), 1.0);
    for (std::size_t j = 0; j < abs_times.size(); ++j) {
        const auto it = std::upper_bound(bounds.begin(), bounds.end(), abs_times[j]);
        const std::size_t idx = static_cast<std::size_t>(it - bounds.begin()) - 1;
        out[j] = fidelity_at_bound[idx];
    }
    return out;
}

}  // namespace

double resolve_step(const std::vector<double>& times, const PerturbationParams& p, const QuadratureSettings& q) {
    if (q.step_override > 0.0) return q.step_override;

    double alpha_rate = 0.0;
    double mode_rate = 0.0;
    if (p.spectrum.is_continuum) {
        // sup_t d(alpha)/dt for the continuum weight is (9/8) lambda^2 / (2 w_c)
        alpha_rate = 1.125 * p.lambda * p.lambda / (2.0 * p.spectrum.omega_c);
    } else {
        for (const bath::Mode& m : p.spectrum.modes) {
            const double wk = p.lambda * m.g / m.omega;
            alpha_rate += 2.0 * wk * wk * m.omega;
            mode_rate = std::max(mode_rate, m.omega);
        }
    }
    const ChiEvaluator chi(gate_generator(p.gate, p.tau), p.phi0);
    const double rate = 3.0 * alpha_rate + mode_rate + chi.frequency_spread();
    const double h_phase = rate > 1e-300 ? pi / (4.0 * rate) : std::numeric_limits<double>::infinity();

    const std::vector<double> bounds = boundaries_from(times);
    double dgrid = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < bounds.size(); ++i) dgrid = std::min(dgrid, bounds[i] - bounds[i - 1]);
    const double h_grid = std::isfinite(dgrid) ? dgrid / 16.0 : std::numeric_limits<double>::infinity();

    const double h = std::min(h_phase, h_grid);
    return std::isfinite(h) ? h : 1.0;
}

FidelityCurve fidelity_curve(const std::vector<double>& eps_t_grid, const PerturbationParams& p,
                             const QuadratureSettings& q) {
    const auto start = std::chrono::steady_clock::now();
    if (p.epsilon < 0.0) throw std::invalid_argument("PerturbationParams: epsilon must be nonnegative");
    for (std::size_t j = 0; j < eps_t_grid.size(); ++j) {
        if (eps_t_grid[j] < 0.0) throw std::invalid_argument("fidelity_curve: grid values must be nonnegative");
        if (j > 0 && eps_t_grid[j] < eps_t_grid[j - 1])
            throw std::invalid_argument("fidelity_curve: grid must be sorted");
    }
    std::vector<double> abs_times(eps_t_grid.size());
    for (std::size_t j = 0; j < eps_t_grid.size(); ++j)
        abs_times[j] = p.epsilon > 0.0 ? eps_t_grid[j] / p.epsilon : eps_t_grid[j];

    const ChiEvaluator chi(gate_generator(p.gate, p.tau), p.phi0);
    const double step = resolve_step(abs_times, p, q);

    FidelityCurve curve;
    curve.params = p;
    curve.step = step;
    curve.gauss_points = q.gauss_points;
    curve.convergence_check = q.convergence_check;
    curve.threads = q.threads;

    const std::vector<double> fine = run_level(p, chi, abs_times, q.convergence_check ? 0.5 * step : step,
                                               q.gauss_points, q.threads);
    std::vector<double> coarse;
    if (q.convergence_check) coarse = run_level(p, chi, abs_times, step, q.gauss_points, q.threads);

    curve.points.resize(eps_t_grid.size());
    for (std::size_t j = 0; j < eps_t_grid.size(); ++j) {
        CurvePoint& pt = curve.points[j];
        pt.eps_t = eps_t_grid[j];
        pt.fidelity = fine[j];
        pt.exceeds_one = fine[j] > 1.0 + 1e-6;
        if (q.convergence_check) {
            pt.coarse = coarse[j];
            pt.quad_warning = std::abs(coarse[j] - fine[j]) > q.tolerance;
        }
    }
    curve.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return curve;
}

double fidelity(double t, const PerturbationParams& p, const QuadratureSettings& q) {
    if (t < 0.0) throw std::invalid_argument("fidelity: time must be nonnegative");
    const ChiEvaluator chi(gate_generator(p.gate, p.tau), p.phi0);
    const std::vector<double> abs_times{t};
    const double step = resolve_step(abs_times, p, q);
    const std::vector<double> fine =
        run_level(p, chi, abs_times, q.convergence_check ? 0.5 * step : step, q.gauss_points, q.threads);
    if (q.convergence_check) {
        const std::vector<double> coarse = run_level(p, chi, abs_times, step, q.gauss_points, q.threads);
        if (std::abs(coarse[0] - fine[0]) > q.tolerance)
            throw QuadratureError("fidelity: refinement levels disagree beyond tolerance", coarse[0], fine[0]);
    }
    return fine[0];
}

StateVec16 chi(Sign sign, double t, const PerturbationParams& p) {
    return ChiEvaluator(gate_generator(p.gate, p.tau), p.phi0).chi(sign, t);
}

}  // namespace zeno::pt
