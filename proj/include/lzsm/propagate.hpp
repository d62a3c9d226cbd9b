#pragma once

// High-accuracy integration of i d(psi)/dt = H(t) psi for the two-level XZ
// Hamiltonian. Steps are commutator-free 4th-order Magnus exponentials
// (two exact SU(2) rotations per step), so every accepted step is unitary to
// rounding; step size is controlled by step doubling. The output lands exactly
// on the requested grid.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "lzsm/drive.hpp"
#include "lzsm/errors.hpp"
#include "lzsm/pauli.hpp"
#include "lzsm/trace.hpp"

namespace lzsm {

enum class Method { Exact, Adiabatic, Floquet1, Floquet2 };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Adiabatic: return "adiabatic";
        case Method::Floquet1: return "floquet1";
        case Method::Floquet2: return "floquet2";
    }
    return "?";
}

struct ToleranceSpec {
    double rtol = 1e-10;
    double atol = 1e-12;
};

struct BlochSample {
    double t = 0.0;    // ms
    double tau = 0.0;  // t * omega
    double sx = 0.0, sy = 0.0, sz = 0.0;
    double p_plus = 0.0;  // occupation of the instantaneous |+> eigenstate
};

struct Trajectory {
    DriveParams params;
    Method method = Method::Exact;
    ToleranceSpec tol;
    std::vector<double> grid;  // ms, strictly increasing
    std::vector<BlochSample> samples;
    std::vector<SpinState> states;
};

inline SpinState prepare_sigma_x_eigenstate() {
    const double r = 1.0 / std::sqrt(2.0);
    return {cplx(r, 0.0), cplx(r, 0.0)};
}

namespace detail {

// Gauss-Legendre nodes and the CF4 weights (sqrt(3)/6 = 0.2886751...)
inline constexpr double cf4_s36 = 0.28867513459481288225457439025098;
inline constexpr double cf4_c1 = 0.5 - cf4_s36;
inline constexpr double cf4_c2 = 0.5 + cf4_s36;
inline constexpr double cf4_a1 = 0.25 + cf4_s36;
inline constexpr double cf4_a2 = 0.25 - cf4_s36;

// one CF4 step over [t, t+h]; field returns angular (hx, hz) in rad/ms
template <class Field>
SpinState cf4_step(Field&& field, double t, double h, const SpinState& psi) {
    const auto [hx1, hz1] = field(t + cf4_c1 * h);
    const auto [hx2, hz2] = field(t + cf4_c2 * h);
    const SpinState mid = apply(
        su2_rotation(h * (cf4_a1 * hx1 + cf4_a2 * hx2), 0.0, h * (cf4_a1 * hz1 + cf4_a2 * hz2)), psi);
    return apply(
        su2_rotation(h * (cf4_a2 * hx1 + cf4_a1 * hx2), 0.0, h * (cf4_a2 * hz1 + cf4_a1 * hz2)), mid);
}

} // namespace detail

// Integrate psi along `grid` (monotone, increasing or decreasing); returns the
// state at every grid point. grid.front() is the initial time.
template <class Field>
std::vector<SpinState> integrate_grid(Field&& field, const std::vector<double>& grid,
                                      const SpinState& psi0, ToleranceSpec tol = {}) {
    if (grid.size() < 1) throw config_error("integrate_grid: empty grid");
    std::vector<SpinState> out;
    out.reserve(grid.size());
    SpinState psi = psi0;
    out.push_back(psi);

    const double t_begin = grid.front();
    const double t_end = grid.back();
    if (grid.size() == 1) return out;
    const double sgn = t_end > t_begin ? 1.0 : -1.0;
    const double span = std::abs(t_end - t_begin);
    const double tol_step = tol.atol + tol.rtol;  // ||psi|| = 1

    // initial step from the local field scale
    double h = span / static_cast<double>(grid.size() - 1);
    {
        const auto [hx0, hz0] = field(t_begin);
        const double scale = std::max(std::hypot(hx0, hz0), 1e-6);
        h = std::min(h, 0.5 * std::pow(tol_step, 0.2) * 10.0 / scale);
    }

    double t = t_begin;
    std::size_t gi = 1;
    const double tiny = 1e-14 * std::max(1.0, std::max(std::abs(t_begin), std::abs(t_end)));
    while (gi < grid.size()) {
        const double t_next = grid[gi];
        bool clamped = false;
        double h_try = h;
        if (sgn * (t + sgn * h_try) >= sgn * t_next) {
            h_try = std::abs(t_next - t);
            clamped = true;
        }
        if (h_try < tiny) {
            // already at the grid point
            t = t_next;
            out.push_back(psi);
            ++gi;
            continue;
        }
        const double hs = sgn * h_try;
        const SpinState full = detail::cf4_step(field, t, hs, psi);
        SpinState half = detail::cf4_step(field, t, 0.5 * hs, psi);
        half = detail::cf4_step(field, t + 0.5 * hs, 0.5 * hs, half);
        const double err = std::sqrt(std::norm(full.c_up - half.c_up) +
                                     std::norm(full.c_down - half.c_down));
        if (err <= tol_step) {
            t += hs;
            psi = half;  // local extrapolation
            if (clamped) {
                t = t_next;
                out.push_back(psi);
                ++gi;
            } else {
                // free-running step: standard controller, growth capped
                const double fac = 0.9 * std::pow(tol_step / std::max(err, 1e-300), 0.2);
                h = std::min(h * std::clamp(fac, 0.2, 2.5), span);
            }
        } else {
            const double fac = 0.9 * std::pow(tol_step / err, 0.2);
            h = h_try * std::clamp(fac, 0.1, 0.9);
            if (h < tiny) throw integration_failure(t);
        }
    }
    return out;
}

// angular (hx, hz) callback for the XZ drive, rad/ms
inline auto angular_field(const DriveParams& p) {
    return [p](double t) {
        const FieldVector h = effective_field(p, t);
        return std::pair<double, double>{two_pi * h.hx, two_pi * h.hz};
    };
}

// P+ = |<+(t)|psi>|^2 with |+(t)> = (cos(theta/2), sin(theta/2)); theta may be
// any branch of the orientation angle (a 2pi shift only flips the sign of |+>).
inline double occupation_from_theta(double theta, const SpinState& psi) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    return std::norm(c * psi.c_up + s * psi.c_down);
}

inline double instantaneous_occupation(const DriveParams& p, const SpinState& psi, double t) {
    return occupation_from_theta(orientation_angle(p, t), psi);
}

inline Trajectory make_trajectory(const DriveParams& p, Method method, ToleranceSpec tol,
                                  std::vector<double> grid, std::vector<SpinState> states) {
    Trajectory traj;
    traj.params = p;
    traj.method = method;
    traj.tol = tol;
    traj.grid = std::move(grid);
    traj.states = std::move(states);
    const std::vector<double> theta = orientation_series(p, traj.grid);
    traj.samples.resize(traj.grid.size());
    for (std::size_t i = 0; i < traj.grid.size(); ++i) {
        const SpinState& s = traj.states[i];
        BlochSample& b = traj.samples[i];
        b.t = traj.grid[i];
        b.tau = traj.grid[i] * p.omega;
        b.sx = s.sx();
        b.sy = s.sy();
        b.sz = s.sz();
        b.p_plus = occupation_from_theta(theta[i], s);
    }
    return traj;
}

// Exact propagation of the XZ drive over [t0, t1], n_samples uniform outputs.
inline Trajectory evolve(const DriveParams& p, const SpinState& psi0, double t0, double t1,
                         std::size_t n_samples, ToleranceSpec tol = {}) {
    if (!(t1 > t0)) throw config_error("evolve: need t1 > t0");
    if (n_samples < 2) throw config_error("evolve: need n_samples >= 2");
    if (!(tol.rtol > 0.0) || !(tol.atol > 0.0)) throw config_error("evolve: tolerances must be > 0");
    std::vector<double> grid(n_samples);
    const double dt = (t1 - t0) / static_cast<double>(n_samples - 1);
    for (std::size_t i = 0; i < n_samples; ++i) grid[i] = t0 + dt * static_cast<double>(i);
    grid.back() = t1;
    std::vector<SpinState> states = integrate_grid(angular_field(p), grid, psi0, tol);
    return make_trajectory(p, Method::Exact, tol, std::move(grid), std::move(states));
}

// convenience: reduced-time span with a fixed per-period sampling density
inline Trajectory evolve_tau(const DriveParams& p, const SpinState& psi0, double tau0, double tau1,
                             std::size_t samples_per_period = 512, ToleranceSpec tol = {}) {
    const double T = p.period_ms();
    const std::size_t n =
        static_cast<std::size_t>(std::llround((tau1 - tau0) * static_cast<double>(samples_per_period))) + 1;
    return evolve(p, psi0, tau0 * T, tau1 * T, std::max<std::size_t>(n, 2), tol);
}

// synthetic polarimeter signal: the transverse component along the detection axis
enum class DetectionAxis { X, Y };

inline SampledTrace projected_signal(const Trajectory& traj, DetectionAxis axis) {
    if (traj.samples.empty()) throw config_error("projected_signal: empty trajectory");
    SampledTrace tr;
    tr.t0 = traj.grid.front();
    tr.sample_rate = traj.grid.size() > 1
                         ? 1.0 / ((traj.grid.back() - traj.grid.front()) /
                                  static_cast<double>(traj.grid.size() - 1))
                         : 0.0;
    tr.label = axis == DetectionAxis::X ? "sx" : "sy";
    tr.values.reserve(traj.samples.size());
    for (const BlochSample& b : traj.samples)
        tr.values.push_back(axis == DetectionAxis::X ? b.sx : b.sy);
    return tr;
}

} // namespace lzsm
