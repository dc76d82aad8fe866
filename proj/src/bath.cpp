#include "zeno/bath.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace zeno::bath {

namespace {

void require_nonnegative(double t, const char* what) {
    if (t < 0.0) throw std::invalid_argument(std::string(what) + ": time must be nonnegative");
}

// lambda^2 (1 / 2 w_c^3) \int_0^{40 w_c} e^{-w/w_c} x(w) dw
template <typename F>
double continuum_integral(const BathParams& bath, double omega_c, F&& x) {
    using boost::math::quadrature::gauss_kronrod;
    const auto integrand = [&](double w) { return std::exp(-w / omega_c) * x(w); };
    const double value =
        gauss_kronrod<double, 61>::integrate(integrand, 0.0, 40.0 * omega_c, 15, 1e-12);
    return bath.lambda * bath.lambda / (2.0 * omega_c * omega_c * omega_c) * value;
}

double lorentz(double x) { return 1.0 / (1.0 + x * x); }

double alpha_closed(double t, const BathParams& bath, double omega_c) {
    const double x = omega_c * t;
    return bath.lambda * bath.lambda * t / (2.0 * omega_c) * (x * x) * lorentz(x);
}

double overlap_s_closed(double t1, double t2, Sign sign, const BathParams& bath, double omega_c) {
    const double l2 = bath.lambda * bath.lambda;
    const double delta = t2 - t1;
    if (sign == Sign::minus) return l2 * delta * delta * lorentz(omega_c * delta);
    return l2 / (2.0 * omega_c * omega_c) *
           (6.0 - 4.0 * lorentz(omega_c * t1) - 4.0 * lorentz(omega_c * t2) + 2.0 * lorentz(omega_c * delta));
}

double overlap_phase_closed(double t1, double t2, const BathParams& bath, double omega_c) {
    const auto h = [omega_c](double s) { return s / (2.0 * omega_c) * lorentz(omega_c * s); };
    return bath.lambda * bath.lambda * (h(t2) - h(t1) + h(t1 - t2));
}

}  // namespace

SpectralModel SpectralModel::discrete(std::vector<Mode> modes) {
    for (const Mode& m : modes)
        if (!(m.omega > 0.0)) throw std::invalid_argument("SpectralModel: mode frequencies must be positive");
    SpectralModel s;
    s.is_continuum = false;
    s.modes = std::move(modes);
    return s;
}

SpectralModel SpectralModel::continuum(double omega_c, ContinuumEval eval) {
    if (!(omega_c > 0.0)) throw std::invalid_argument("SpectralModel: cutoff frequency must be positive");
    SpectralModel s;
    s.is_continuum = true;
    s.omega_c = omega_c;
    s.eval = eval;
    return s;
}

double alpha(double t, const BathParams& bath, const SpectralModel& spec) {
    require_nonnegative(t, "alpha");
    if (spec.is_continuum) {
        if (spec.eval == ContinuumEval::quadrature) return alpha_quadrature(t, bath, spec.omega_c);
        return alpha_closed(t, bath, spec.omega_c);
    }
    double sum = 0.0;
    for (const Mode& m : spec.modes) {
        const double w = bath.lambda * m.g / m.omega;
        sum += w * w * (m.omega * t - std::sin(m.omega * t));
    }
    return sum;
}

cxd f_amp(double omega, double t, const BathParams& bath, double g) {
    if (!(omega > 0.0)) throw std::invalid_argument("f_amp: frequency must be positive");
    require_nonnegative(t, "f_amp");
    return -(bath.lambda * g / omega) * (1.0 - std::exp(cxd(0.0, omega * t)));
}

double overlap_s(double t1, double t2, Sign sign, const BathParams& bath, const SpectralModel& spec) {
    require_nonnegative(t1, "overlap_s");
    require_nonnegative(t2, "overlap_s");
    if (spec.is_continuum) {
        if (spec.eval == ContinuumEval::quadrature) return overlap_s_quadrature(t1, t2, sign, bath, spec.omega_c);
        return overlap_s_closed(t1, t2, sign, bath, spec.omega_c);
    }
    double sum = 0.0;
    for (const Mode& m : spec.modes) {
        const cxd f1 = f_amp(m.omega, t1, bath, m.g);
        const cxd f2 = f_amp(m.omega, t2, bath, m.g);
        sum += sign == Sign::minus ? std::norm(f1 - f2) : std::norm(f1 + f2);
    }
    return sum;
}

double overlap_phase(double t1, double t2, const BathParams& bath, const SpectralModel& spec) {
    require_nonnegative(t1, "overlap_phase");
    require_nonnegative(t2, "overlap_phase");
    if (spec.is_continuum) {
        if (spec.eval == ContinuumEval::quadrature) return overlap_phase_quadrature(t1, t2, bath, spec.omega_c);
        return overlap_phase_closed(t1, t2, bath, spec.omega_c);
    }
    double sum = 0.0;
    for (const Mode& m : spec.modes)
        sum += std::imag(f_amp(m.omega, t1, bath, m.g) * std::conj(f_amp(m.omega, t2, bath, m.g)));
    return sum;
}

cxd vacuum_correlation(Sign a, Sign b, double t1, double t2, const BathParams& bath, const SpectralModel& spec) {
    const int ab = sign_value(a) * sign_value(b);
    const Sign combine = ab > 0 ? Sign::plus : Sign::minus;
    const double magnitude_exponent = -0.5 * overlap_s(t1, t2, combine, bath, spec);
    const double phase = ab * overlap_phase(t1, t2, bath, spec);
    return std::exp(cxd(magnitude_exponent, phase));
}

double alpha_quadrature(double t, const BathParams& bath, double omega_c) {
    require_nonnegative(t, "alpha_quadrature");
    return continuum_integral(bath, omega_c, [t](double w) { return w * t - std::sin(w * t); });
}

double overlap_s_quadrature(double t1, double t2, Sign sign, const BathParams& bath, double omega_c) {
    if (sign == Sign::minus) {
        const double delta = t2 - t1;
        return continuum_integral(bath, omega_c, [delta](double w) { return 2.0 * (1.0 - std::cos(w * delta)); });
    }
    return continuum_integral(bath, omega_c, [t1, t2](double w) {
        return 6.0 - 4.0 * std::cos(w * t1) - 4.0 * std::cos(w * t2) + 2.0 * std::cos(w * (t2 - t1));
    });
}

double overlap_phase_quadrature(double t1, double t2, const BathParams& bath, double omega_c) {
    return continuum_integral(bath, omega_c, [t1, t2](double w) {
        return std::sin(w * t2) - std::sin(w * t1) + std::sin(w * (t1 - t2));
    });
}

}  // namespace zeno::bath
