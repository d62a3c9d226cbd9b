#pragma once

// Adiabatic perturbation framework and the rotating-XZ closed form:
//   h^R(t) = (O sin(wt+Phi), 0, w0z + O cos(wt+Phi)),  m = w0z/O,
//   U(tau) = exp(-i theta(tau) sy/2) exp(-i phi(tau) sz/2) exp(+i theta(0) sy/2),
//   <sx> = sin th sin th0 + cos th cos phi cos th0,
//   <sy> = cos th0 sin phi,
//   <sz> = cos th sin th0 - sin th cos phi cos th0,
// with phi the accumulated dressed-Larmor phase. The general-XZ estimate
// evaluates the same formulas with the (Ox cos wt, 0, w0z + Oz cos(wt+Phi0z))
// field; for Ox = Oz and Phi0z = pi/2 the two coincide.

#include <cmath>
#include <vector>

#include "lzsm/drive.hpp"
#include "lzsm/errors.hpp"
#include "lzsm/pauli.hpp"
#include "lzsm/quadrature.hpp"

namespace lzsm {

struct RotatingXZParams {
    double omega = 1.0;    // kHz
    double omega0z = 0.0;  // kHz
    double Omega = 1.0;    // common Rabi amplitude, kHz
    double Phi = 0.0;      // rad

    double m() const { return omega0z / Omega; }
    double period_ms() const { return 1.0 / omega; }

    RotatingXZParams validated() const {
        if (!(omega > 0.0)) throw config_error("rotating XZ: omega must be > 0");
        if (!(Omega > 0.0)) throw config_error("rotating XZ: Omega must be > 0 (m finite)");
        if (omega0z < 0.0) throw config_error("rotating XZ: omega0z must be >= 0");
        return *this;
    }
};

inline FieldVector rotating_field(const RotatingXZParams& p, double t) {
    const double a = two_pi * p.omega * t + p.Phi;
    return {p.Omega * std::sin(a), 0.0, p.omega0z + p.Omega * std::cos(a)};
}

// |h^R| = Omega sqrt(1 + 2 m cos(wt+Phi) + m^2), kHz
inline double rotating_field_magnitude(const RotatingXZParams& p, double t) {
    const double m = p.m();
    const double c = std::cos(two_pi * p.omega * t + p.Phi);
    return p.Omega * std::sqrt(std::max(0.0, 1.0 + 2.0 * m * c + m * m));
}

inline auto angular_field(const RotatingXZParams& p) {
    return [p](double t) {
        const FieldVector h = rotating_field(p, t);
        return std::pair<double, double>{two_pi * h.hx, two_pi * h.hz};
    };
}

namespace detail {

inline void require_no_exact_crossing(const RotatingXZParams& p) {
    // min_t h^R = Omega |m - 1|; the adiabatic closed form needs it > 0
    const double scale = std::max(std::max(p.omega, p.omega0z), p.Omega);
    if (p.Omega * std::abs(p.m() - 1.0) <= 1e-9 * scale) throw exact_crossing_error(p.m());
}

// unwrapped theta^R(t) from t = 0, tracked along an internal grid (the branch
// only moves for m < 1, where h_z changes sign twice per period)
inline double theta_rotating_unwrapped(const RotatingXZParams& p, double t) {
    const double m = p.m();
    auto principal = [&](double u) {
        const double a = two_pi * p.omega * u + p.Phi;
        return std::atan2(std::sin(a), m + std::cos(a));
    };
    if (m > 1.0) return principal(t);  // |theta| < pi/2 always, no branch moves
    const int steps_per_period = 64;
    const double dt = p.period_ms() / steps_per_period;
    const int n = static_cast<int>(std::floor(std::abs(t) / dt));
    const double sgn = t >= 0.0 ? 1.0 : -1.0;
    double prev = principal(0.0);
    double acc = prev;
    for (int i = 1; i <= n; ++i) {
        const double cur = principal(sgn * dt * i);
        double d = cur - prev;
        d -= two_pi * std::round(d / two_pi);
        acc += d;
        prev = cur;
    }
    const double cur = principal(t);
    double d = cur - prev;
    d -= two_pi * std::round(d / two_pi);
    return acc + d;
}

} // namespace detail

// phi(tau) of Eq.-(XZ:PHI) form, radians, by adaptive quadrature
inline double rotating_accumulated_phase(const RotatingXZParams& p, double tau,
                                         double quad_tol = 1e-10) {
    return accumulated_phase_of([&](double u) { return rotating_field_magnitude(p, u); },
                                tau * p.period_ms(), p.period_ms(), quad_tol);
}

// lowest-order adiabatic propagator U(tau); unitary by construction
inline Mat2 adiabatic_propagator(const RotatingXZParams& p, double tau, double quad_tol = 1e-10) {
    detail::require_no_exact_crossing(p);
    const double th0 = detail::theta_rotating_unwrapped(p, 0.0);
    const double th = detail::theta_rotating_unwrapped(p, tau * p.period_ms());
    const double phi = rotating_accumulated_phase(p, tau, quad_tol);
    const Mat2 ry_th = su2_rotation(0.0, th, 0.0);
    const Mat2 rz_phi = su2_rotation(0.0, 0.0, phi);
    const Mat2 ry_back = su2_rotation(0.0, -th0, 0.0);
    return ry_th * (rz_phi * ry_back);
}

struct AdiabaticSeries {
    std::vector<double> sx, sy, sz;
    double theta0 = 0.0;
    bool nonadiabatic_warning = false;  // set by the general-XZ estimate
};

// closed-form spin expectation values for the sigma_x-eigenstate preparation
inline AdiabaticSeries adiabatic_expectations(const RotatingXZParams& p,
                                              const std::vector<double>& tau_grid,
                                              double quad_tol = 1e-10) {
    detail::require_no_exact_crossing(p);
    AdiabaticSeries out;
    out.theta0 = detail::theta_rotating_unwrapped(p, 0.0);
    const double th0 = out.theta0;
    out.sx.reserve(tau_grid.size());
    out.sy.reserve(tau_grid.size());
    out.sz.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        const double th = detail::theta_rotating_unwrapped(p, tau * p.period_ms());
        const double phi = rotating_accumulated_phase(p, tau, quad_tol);
        out.sx.push_back(std::sin(th) * std::sin(th0) + std::cos(th) * std::cos(phi) * std::cos(th0));
        out.sy.push_back(std::cos(th0) * std::sin(phi));
        out.sz.push_back(std::cos(th) * std::sin(th0) - std::sin(th) * std::cos(phi) * std::cos(th0));
    }
    return out;
}

// Appendix-B formulas evaluated with the general XZ field of Eq. (2); valid in
// the adiabatic regime (a warning flag is set otherwise, never an error)
inline AdiabaticSeries general_adiabatic_estimate(const DriveParams& p,
                                                  const std::vector<double>& tau_grid,
                                                  double quad_tol = 1e-10) {
    AdiabaticSeries out;
    out.nonadiabatic_warning =
        classify_adiabaticity(p).cls == AdiabaticityClass::Nonadiabatic;
    const double T = p.period_ms();
    std::vector<double> ts(tau_grid.size());
    for (std::size_t i = 0; i < tau_grid.size(); ++i) ts[i] = tau_grid[i] * T;
    const std::vector<double> theta = orientation_series(p, ts);
    const double th0 = orientation_angle(p, 0.0);
    out.theta0 = th0;
    out.sx.reserve(ts.size());
    out.sy.reserve(ts.size());
    out.sz.reserve(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double phi = accumulated_phase(p, ts[i], quad_tol);
        const double th = theta[i];
        out.sx.push_back(std::sin(th) * std::sin(th0) + std::cos(th) * std::cos(phi) * std::cos(th0));
        out.sy.push_back(std::cos(th0) * std::sin(phi));
        out.sz.push_back(std::cos(th) * std::sin(th0) - std::sin(th) * std::cos(phi) * std::cos(th0));
    }
    return out;
}

// V_ND = -(1/2) theta'(tau) sigma_y; returns the sigma_y coefficient -theta'(tau)/2
// (reduced-time derivative). Large |V_ND| against (2pi/omega) h flags breakdown.
inline double nonadiabatic_coupling(const DriveParams& p, double t) {
    return -0.5 * orientation_angle_derivative_tau(p, t);
}

inline double nonadiabatic_coupling(const RotatingXZParams& p, double t) {
    const double m = p.m();
    const double a = two_pi * p.omega * t + p.Phi;
    const double denom = 1.0 + 2.0 * m * std::cos(a) + m * m;
    const double scale = std::max(std::max(p.omega, p.omega0z), p.Omega);
    if (p.Omega * p.Omega * denom <= scale * scale * 1e-18) throw degenerate_field_error(t);
    // d(theta^R)/d(tau) = 2pi (1 + m cos a)/(1 + 2 m cos a + m^2)
    return -0.5 * two_pi * (1.0 + m * std::cos(a)) / denom;
}

} // namespace lzsm
