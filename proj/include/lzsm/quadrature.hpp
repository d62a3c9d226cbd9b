#pragma once

// Accumulated LZSM phase phi(t) = int_0^t Omega_Ld dt' (radians), evaluated by
// adaptive Gauss-Kronrod quadrature. The integrand is T-periodic, so spans of
// many drive periods split exactly into n * phi(T) + remainder.

#include <cmath>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lzsm/drive.hpp"
#include "lzsm/errors.hpp"

namespace lzsm {

namespace detail {

// absolute-tolerance adaptive GK15 on [a, b]
template <class F>
double integrate_abs(F&& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    double err = 0.0;
    const double val = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, 15, 1e-14, &err);
    // the boost tolerance is relative; fall back to bisection if the absolute
    // estimate is still above budget (smooth integrands here never need it)
    if (err > abs_tol && b - a > 1e-12) {
        const double m = 0.5 * (a + b);
        return integrate_abs(f, a, m, 0.5 * abs_tol) + integrate_abs(f, m, b, 0.5 * abs_tol);
    }
    return val;
}

} // namespace detail

// phase integral of an arbitrary positive frequency profile (kHz), radians
template <class F>
double accumulated_phase_of(F&& omega_ld_khz, double t, double period_ms, double quad_tol = 1e-10) {
    if (t < 0.0) throw config_error("accumulated_phase: t must be >= 0");
    if (!(quad_tol > 0.0)) throw config_error("accumulated_phase: quad_tol must be > 0");
    auto f = [&](double u) { return two_pi * omega_ld_khz(u); };
    const double n_whole = std::floor(t / period_ms);
    double phase = 0.0;
    if (n_whole >= 1.0) {
        const double one = detail::integrate_abs(f, 0.0, period_ms, 0.5 * quad_tol / n_whole);
        phase += n_whole * one;
    }
    const double rem = t - n_whole * period_ms;
    phase += detail::integrate_abs(f, 0.0, rem, 0.5 * quad_tol);
    return phase;
}

// phi(t) = int_0^t Omega_Ld(tau') dtau' for the XZ drive, radians
inline double accumulated_phase(const DriveParams& p, double t, double quad_tol = 1e-10) {
    return accumulated_phase_of([&](double u) { return dressed_larmor(p, u); },
                                t, p.period_ms(), quad_tol);
}

} // namespace lzsm
