#pragma once

// Minimal complex 2x2 algebra for a single qubit: Pauli decomposition and
// closed-form SU(2) exponentials (exp(-i a.sigma/2) = cos(|a|/2) - i sin(|a|/2) a^.sigma),
// exact to rounding. Everything here is a value type.

#include <array>
#include <cmath>
#include <complex>

namespace lzsm {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

struct Mat2 {
    // row-major: [a b; c d]
    cplx a{}, b{}, c{}, d{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }

    Mat2 adjoint() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
    cplx trace() const { return a + d; }
    cplx det() const { return a * d - b * c; }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2& operator+=(const Mat2& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }
    friend Mat2 operator*(cplx s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
    friend Mat2 operator*(double s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
};

inline Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

inline Mat2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 sigma_y() { return {0.0, cplx(0, -1), cplx(0, 1), 0.0}; }
inline Mat2 sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }
inline Mat2 sigma_plus() { return {0.0, 1.0, 0.0, 0.0}; }   // |up><down|
inline Mat2 sigma_minus() { return {0.0, 0.0, 1.0, 0.0}; }

// exp(-i (bx sx + by sy + bz sz)/2), i.e. a rotation by |b| about b^.
inline Mat2 su2_rotation(double bx, double by, double bz) {
    const double a = std::sqrt(bx * bx + by * by + bz * bz);
    if (a == 0.0) return Mat2::identity();
    const double cs = std::cos(0.5 * a);
    const double sn = std::sin(0.5 * a) / a;
    return {cplx(cs, -sn * bz), cplx(sn * by, -sn * bx),
            cplx(-sn * by, -sn * bx), cplx(cs, sn * bz)};
}

// Pauli components of a (numerically) Hermitian matrix: H = a0 I + ax sx + ay sy + az sz.
struct PauliCoeffs {
    double a0, ax, ay, az;
};

inline PauliCoeffs pauli_coeffs(const Mat2& h) {
    return {0.5 * std::real(h.a + h.d),
            0.5 * std::real(h.b + h.c),
            0.5 * std::imag(h.c - h.b),
            0.5 * std::real(h.a - h.d)};
}

// exp(-i H dt) for Hermitian H, via the Pauli decomposition.
inline Mat2 expm_minus_i(const Mat2& h, double dt) {
    const PauliCoeffs p = pauli_coeffs(h);
    Mat2 u = su2_rotation(2.0 * p.ax * dt, 2.0 * p.ay * dt, 2.0 * p.az * dt);
    const cplx phase = std::exp(cplx(0.0, -p.a0 * dt));
    return phase * u;
}

struct SpinState {
    cplx c_up{1.0, 0.0};
    cplx c_down{0.0, 0.0};

    double norm2() const { return std::norm(c_up) + std::norm(c_down); }

    SpinState normalized() const {
        const double n = std::sqrt(norm2());
        return {c_up / n, c_down / n};
    }

    // <sx>, <sy>, <sz> of the pure state
    double sx() const { return 2.0 * std::real(std::conj(c_up) * c_down); }
    double sy() const { return 2.0 * std::imag(std::conj(c_up) * c_down); }
    double sz() const { return std::norm(c_up) - std::norm(c_down); }
};

inline SpinState apply(const Mat2& m, const SpinState& s) {
    return {m.a * s.c_up + m.b * s.c_down, m.c * s.c_up + m.d * s.c_down};
}

inline cplx inner(const SpinState& x, const SpinState& y) {
    return std::conj(x.c_up) * y.c_up + std::conj(x.c_down) * y.c_down;
}

} // namespace lzsm
