#pragma once

// Test-only reference routes, independent of the library implementations they
// check: Eigen eigensolves, direct DFT, composite-Simpson quadrature, and the
// brute-force rotating-frame transformation.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lzsm/drive.hpp"
#include "lzsm/pauli.hpp"

namespace oracles {

inline Eigen::Matrix2cd to_eigen(const lzsm::Mat2& m) {
    Eigen::Matrix2cd e;
    e << m.a, m.b, m.c, m.d;
    return e;
}

// eigenvalues of a Hermitian 2x2, ascending
inline std::pair<double, double> hermitian_eigenvalues(const lzsm::Mat2& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> s(to_eigen(m));
    return {s.eigenvalues()(0), s.eigenvalues()(1)};
}

// plain O(N^2)-free direct DFT of one period of f sampled at N points:
// c_n = (1/N) sum_k f(t_k) e^{-i n w t_k}
inline std::complex<double> dft_coefficient(const std::vector<std::complex<double>>& f, int n) {
    const std::size_t N = f.size();
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        const double ang = -lzsm::two_pi * static_cast<double>(n) * static_cast<double>(k) /
                           static_cast<double>(N);
        acc += f[k] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc / static_cast<double>(N);
}

// composite Simpson on a fixed fine grid; independent of the adaptive GK path
template <class F>
double simpson(F&& f, double a, double b, int panels = 1 << 16) {
    const int n2 = panels * 2;
    const double h = (b - a) / n2;
    double acc = f(a) + f(b);
    for (int i = 1; i < n2; ++i) acc += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// H''(t) by direct frame transformation: e^{i L sz} H e^{-i L sz} - L' sz (angular)
inline lzsm::Mat2 frame_transformed_hpp(const lzsm::DriveParams& p, int r, double t) {
    const double w = lzsm::two_pi * p.omega;
    const lzsm::Mat2 H = lzsm::hamiltonian(p, t);
    const double L = 0.5 * r * w * t +
                     lzsm::two_pi * p.omega_z / (2.0 * w) *
                         (std::sin(w * t + p.phi0z) - std::sin(p.phi0z));
    const double Lp = 0.5 * r * w + lzsm::two_pi * 0.5 * p.omega_z * std::cos(w * t + p.phi0z);
    const lzsm::cplx u = std::exp(lzsm::cplx(0.0, L));
    // diag(u, u*) H diag(u*, u)
    lzsm::Mat2 out{H.a, H.b * u * u, H.c * std::conj(u) * std::conj(u), H.d};
    out.a -= Lp;
    out.d += Lp;
    return out;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0xC0FFEE);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

} // namespace oracles
