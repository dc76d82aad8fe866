// bath.hpp — Dephasing phase, displacement amplitudes, and vacuum expectation
// values of displacement products for the J_z-coupled oscillator environment

#pragma once

#include "zeno/types.hpp"

#include <vector>

namespace zeno::bath {

struct Mode {
    double g = 1.0;      // coupling
    double omega = 1.0;  // frequency, > 0
};

// Continuum functions default to validated closed forms; quadrature stays
// selectable as the fallback evaluation route.
enum class ContinuumEval { closed_form, quadrature };

// Either an explicit mode list or the continuum with density
// R(w) = (w^2 / 2 w_c^3) exp(-w/w_c) and unit coupling.
struct SpectralModel {
    static SpectralModel discrete(std::vector<Mode> modes);
    static SpectralModel continuum(double omega_c, ContinuumEval eval = ContinuumEval::closed_form);

    bool is_continuum = false;
    std::vector<Mode> modes;  // discrete variant
    double omega_c = 0.0;     // continuum variant
    ContinuumEval eval = ContinuumEval::closed_form;
};

struct BathParams {
    double lambda = 0.0;  // J_z-environment coupling strength, >= 0
};

// alpha(t) = sum_k (lambda g_k / w_k)^2 [w_k t - sin(w_k t)], or the continuum
// integral of the same weight. t must be nonnegative.
double alpha(double t, const BathParams& bath, const SpectralModel& spec);

// f(w, t) = -(lambda g / w)(1 - e^{i w t}); per-mode displacement amplitude.
cxd f_amp(double omega, double t, const BathParams& bath, double g = 1.0);

// sum_k |f_k(t1) -/+ f_k(t2)|^2 (Sign::minus gives the difference).
double overlap_s(double t1, double t2, Sign sign, const BathParams& bath, const SpectralModel& spec);

// Im sum_k f_k(t1) conj(f_k(t2)).
double overlap_phase(double t1, double t2, const BathParams& bath, const SpectralModel& spec);

// <0| e^{a gamma(t1)} e^{b gamma(t2)} |0> for the multimode vacuum. Magnitude
// exp(-overlap_s/2) with the matching sign, phase exp(i ab overlap_phase);
// the phase sign is pinned by the truncated-Fock oracle tests.
cxd vacuum_correlation(Sign a, Sign b, double t1, double t2, const BathParams& bath, const SpectralModel& spec);

// Adaptive Gauss-Kronrod references for the continuum model, integrating over
// [0, 40 w_c]; the integrands carry e^{-w/w_c}, so the truncated tail is below
// e^{-40} of the prefactor. Used by tests and by the quadrature fallback.
double alpha_quadrature(double t, const BathParams& bath, double omega_c);
double overlap_s_quadrature(double t1, double t2, Sign sign, const BathParams& bath, double omega_c);
double overlap_phase_quadrature(double t1, double t2, const BathParams& bath, double omega_c);

}  // namespace zeno::bath
