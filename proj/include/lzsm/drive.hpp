#pragma once

// Scenario parameters and the closed-form instantaneous quantities of the XZ
// Hamiltonian H(t) = (1/2) h(t).sigma with
//   h(t) = (Ox cos(wt), 0, w0z + Oz cos(wt + Phi0z)).
//
// Unit conventions, applied uniformly across the library:
//   * user-facing frequencies are ordinary frequencies in kHz (the figure-caption
//     convention, "omega/2pi = 1.028"), time is in ms, tau = t * omega is the
//     reduced time in drive periods;
//   * field components and the dressed Larmor frequency are reported in the same
//     ordinary-kHz units; accumulated phases are in radians (the 2pi lives inside
//     the phase integral).

#include <cmath>
#include <vector>

#include "lzsm/errors.hpp"
#include "lzsm/pauli.hpp"

namespace lzsm {

struct DriveParams {
    double omega = 1.0;    // drive frequency, kHz
    double omega0z = 0.0;  // bare Larmor frequency, kHz
    double omega_x = 0.0;  // transverse Rabi amplitude, kHz
    double omega_z = 0.0;  // longitudinal Rabi amplitude, kHz
    double phi0z = 0.0;    // relative phase of the z dressing, rad

    double period_ms() const { return 1.0 / omega; }

    // largest frequency scale, used for degeneracy thresholds
    double scale() const {
        return std::max(std::max(omega, omega0z), std::max(omega_x, omega_z));
    }

    // enforce invariants: positive drive, nonnegative amplitudes, phi0z in [0, 2pi)
    DriveParams validated() const {
        if (!(omega > 0.0)) throw config_error("omega must be > 0");
        if (omega0z < 0.0 || omega_x < 0.0 || omega_z < 0.0)
            throw config_error("omega0z, omega_x, omega_z must be >= 0");
        DriveParams p = *this;
        p.phi0z = std::fmod(phi0z, two_pi);
        if (p.phi0z < 0.0) p.phi0z += two_pi;
        return p;
    }
};

struct FieldVector {
    double hx = 0.0, hy = 0.0, hz = 0.0;  // kHz; hy = 0 for every XZ scenario
    double magnitude() const { return std::hypot(hx, hz); }
};

inline FieldVector effective_field(const DriveParams& p, double t) {
    const double wt = two_pi * p.omega * t;
    return {p.omega_x * std::cos(wt), 0.0,
            p.omega0z + p.omega_z * std::cos(wt + p.phi0z)};
}

// Omega_Ld(t) = |h(t)|, the instantaneous energy gap / dressed Larmor frequency, kHz
inline double dressed_larmor(const DriveParams& p, double t) {
    return effective_field(p, t).magnitude();
}

// analytic d(Omega_Ld)/dt, kHz per ms
inline double dressed_larmor_derivative(const DriveParams& p, double t) {
    const double w = two_pi * p.omega;
    const double wt = w * t;
    const double hx = p.omega_x * std::cos(wt);
    const double hz = p.omega0z + p.omega_z * std::cos(wt + p.phi0z);
    const double hxd = -p.omega_x * w * std::sin(wt);
    const double hzd = -p.omega_z * w * std::sin(wt + p.phi0z);
    const double h = std::hypot(hx, hz);
    if (h == 0.0) return 0.0;
    return (hx * hxd + hz * hzd) / h;
}

struct EigenPair {
    double e_plus;   // +Omega_Ld/2, kHz
    double e_minus;  // -Omega_Ld/2
};

inline EigenPair eigenvalues(const DriveParams& p, double t) {
    const double half = 0.5 * dressed_larmor(p, t);
    return {half, -half};
}

inline double degeneracy_threshold(const DriveParams& p) { return 1e-9 * p.scale(); }

// theta(t) = atan2(hx, hz), principal value in (-pi, pi]
inline double orientation_angle(const DriveParams& p, double t) {
    const FieldVector h = effective_field(p, t);
    if (h.magnitude() <= degeneracy_threshold(p)) throw degenerate_field_error(t);
    return std::atan2(h.hx, h.hz);
}

// remove 2pi jumps so the series is continuous along the grid
inline void unwrap_angles(std::vector<double>& theta) {
    for (std::size_t i = 1; i < theta.size(); ++i) {
        double d = theta[i] - theta[i - 1];
        theta[i] -= two_pi * std::round(d / two_pi);
    }
}

inline std::vector<double> orientation_series(const DriveParams& p, const std::vector<double>& ts) {
    std::vector<double> th(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) th[i] = orientation_angle(p, ts[i]);
    unwrap_angles(th);
    return th;
}

// d(theta)/dtau with tau = t/T, from the closed-form field derivatives
inline double orientation_angle_derivative_tau(const DriveParams& p, double t) {
    const double w = two_pi * p.omega;
    const double wt = w * t;
    const double hx = p.omega_x * std::cos(wt);
    const double hz = p.omega0z + p.omega_z * std::cos(wt + p.phi0z);
    const double h2 = hx * hx + hz * hz;
    if (h2 <= degeneracy_threshold(p) * degeneracy_threshold(p)) throw degenerate_field_error(t);
    const double hxd = -p.omega_x * w * std::sin(wt);
    const double hzd = -p.omega_z * w * std::sin(wt + p.phi0z);
    return (hxd * hz - hx * hzd) / h2 * p.period_ms();
}

enum class AdiabaticityClass { Adiabatic, Nonadiabatic };

struct AdiabaticityReport {
    AdiabaticityClass cls;
    double drive_scale;  // omega * sqrt(Ox^2 + Oz^2), kHz^2
    double gap_scale;    // omega0z^2, kHz^2
};

// Eq.-(6)-style comparison, ties resolved conservatively to Nonadiabatic
inline AdiabaticityReport classify_adiabaticity(const DriveParams& p) {
    const double drive = p.omega * std::hypot(p.omega_x, p.omega_z);
    const double gap = p.omega0z * p.omega0z;
    return {drive < gap ? AdiabaticityClass::Adiabatic : AdiabaticityClass::Nonadiabatic,
            drive, gap};
}

// Hamiltonian in angular units (rad/ms): H = (1/2)(hx sx + hz sz) * 2pi
inline Mat2 hamiltonian(const DriveParams& p, double t) {
    const FieldVector h = effective_field(p, t);
    const double gx = two_pi * 0.5 * h.hx;
    const double gz = two_pi * 0.5 * h.hz;
    return {gz, gx, gx, -gz};
}

} // namespace lzsm
