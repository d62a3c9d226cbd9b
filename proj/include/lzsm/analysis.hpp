#pragma once

// Data-analysis pipeline of the LZSM interferograms: zero-crossing detection,
// half-period dressed-frequency estimates (the Eq.-(7) analysis with the
// phase-pi spacing convention), Floquet-zone folding, autocorrelation
// quasi-period detection, and Rabi-like slow-period estimation.
// Works on synthetic and externally supplied traces alike.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "lzsm/errors.hpp"
#include "lzsm/pauli.hpp"
#include "lzsm/trace.hpp"

namespace lzsm {

// Sign-change times located by linear interpolation; crossings closer than
// merge_frac sample intervals are merged (noise robustness).
inline std::vector<double> detect_zero_crossings(const SampledTrace& tr, double merge_frac = 0.25) {
    tr.validate();
    const double dt = tr.dt();
    std::vector<double> out;
    const std::vector<double>& v = tr.values;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        double tc;
        if (v[i] == 0.0) {
            tc = tr.time_at(i);
        } else if (v[i] * v[i + 1] < 0.0) {
            tc = tr.time_at(i) + dt * v[i] / (v[i] - v[i + 1]);
        } else {
            continue;
        }
        if (!out.empty() && tc - out.back() < merge_frac * dt) continue;
        out.push_back(tc);
    }
    if (!v.empty() && v.back() == 0.0) {
        const double tc = tr.time_at(v.size() - 1);
        if (out.empty() || tc - out.back() >= merge_frac * dt) out.push_back(tc);
    }
    return out;
}

enum class FreqConvention {
    HalfPeriod,     // f = 1/(2 dt): zeros of sin(phi) are pi apart in phase
    PaperVerbatim,  // f = 2 pi / dt, Eq. (7) as printed (kept for audit)
};

struct FreqEstimate {
    double t_mid = 0.0;        // [t_P(j) + t_P(j+1)]/2, ms
    double f_ld = 0.0;         // kHz (HalfPeriod) or rad/ms (PaperVerbatim)
    double uncertainty = 0.0;  // same units; sigma_f/f = sample interval / dt
    double tau_folded = -1.0;  // set by fold_to_floquet_zone
};

inline std::vector<FreqEstimate> estimate_dressed_frequency(
    const std::vector<double>& crossings, double sample_interval,
    FreqConvention convention = FreqConvention::HalfPeriod) {
    if (crossings.size() < 2)
        throw insufficient_data_error("estimate_dressed_frequency: need >= 2 zero crossings");
    std::vector<FreqEstimate> out;
    out.reserve(crossings.size() - 1);
    for (std::size_t j = 0; j + 1 < crossings.size(); ++j) {
        const double dt = crossings[j + 1] - crossings[j];
        FreqEstimate e;
        e.t_mid = 0.5 * (crossings[j] + crossings[j + 1]);
        e.f_ld = convention == FreqConvention::HalfPeriod ? 1.0 / (2.0 * dt) : two_pi / dt;
        e.uncertainty = e.f_ld * (sample_interval / dt);
        out.push_back(e);
    }
    return out;
}

// t_mid mod period, expressed in reduced time on [0, 1); values unchanged
inline std::vector<FreqEstimate> fold_to_floquet_zone(std::vector<FreqEstimate> estimates,
                                                      double period) {
    if (!(period > 0.0)) throw config_error("fold_to_floquet_zone: period must be > 0");
    for (FreqEstimate& e : estimates) {
        double f = std::fmod(e.t_mid / period, 1.0);
        if (f < 0.0) f += 1.0;
        if (f == 1.0) f = 0.0;
        e.tau_folded = f;
    }
    return estimates;
}

struct QuasiPeriod {
    bool found = false;
    double period = 0.0;      // trace time units (ms)
    double confidence = 0.0;  // |ACF| at the peak, clipped to [0, 1]
    bool sign_flipped = false;  // repetition with a global sign flip (ACF < 0)
};

namespace detail {

// unbiased normalized autocorrelation r(k), k = 0..max_k
inline std::vector<double> autocorrelation(const std::vector<double>& x, std::size_t max_k) {
    const std::size_t n = x.size();
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - mean;
    double denom = 0.0;
    for (double v : y) denom += v * v;
    denom /= static_cast<double>(n);
    std::vector<double> r(max_k + 1, 0.0);
    if (denom <= 0.0) return r;
    for (std::size_t k = 0; k <= max_k; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) s += y[i] * y[i + k];
        r[k] = s / (static_cast<double>(n - k) * denom);
    }
    return r;
}

inline double parabolic_peak(const std::vector<double>& a, std::size_t k) {
    if (k == 0 || k + 1 >= a.size()) return static_cast<double>(k);
    const double y0 = a[k - 1], y1 = a[k], y2 = a[k + 1];
    const double den = y0 - 2.0 * y1 + y2;
    if (den == 0.0) return static_cast<double>(k);
    return static_cast<double>(k) + 0.5 * (y0 - y2) / den;
}

struct AcfPeak {
    std::size_t k = 0;
    double value = 0.0;    // signed r(k)
    double absval = 0.0;
};

// local maxima of |r| on [2, max_k)
inline std::vector<AcfPeak> abs_peaks(const std::vector<double>& r) {
    std::vector<AcfPeak> out;
    for (std::size_t k = 2; k + 1 < r.size(); ++k) {
        const double a0 = std::abs(r[k - 1]), a1 = std::abs(r[k]), a2 = std::abs(r[k + 1]);
        if (a1 >= a0 && a1 > a2) out.push_back({k, r[k], a1});
    }
    return out;
}

} // namespace detail

// Dominant non-zero-lag self-similarity of the trace. Pattern repetition with a
// global sign flip counts (|ACF| is searched); on a near-tie (within 0.02) the
// positive peak wins, so a pure sinusoid reports its full period. When a
// second-harmonic peak is available the period is the spacing between the two
// peaks, which cancels the finite-window bias of the first peak position.
inline QuasiPeriod find_quasi_period(const SampledTrace& tr, double max_lag,
                                     double min_confidence = 0.5) {
    tr.validate();
    if (!(max_lag > 0.0)) throw config_error("find_quasi_period: max_lag must be > 0");
    const std::size_t n = tr.values.size();
    std::size_t max_k = static_cast<std::size_t>(max_lag * tr.sample_rate);
    if (max_k > n - 2) max_k = n - 2;
    if (max_k < 3) throw insufficient_data_error("find_quasi_period: trace too short for max_lag");

    const std::vector<double> r = detail::autocorrelation(tr.values, max_k);
    std::vector<detail::AcfPeak> peaks = detail::abs_peaks(r);
    QuasiPeriod q;
    if (peaks.empty()) return q;

    detail::AcfPeak best_pos{}, best_neg{};
    for (const auto& pk : peaks) {
        if (pk.value >= 0.0) {
            if (pk.absval > best_pos.absval) best_pos = pk;
        } else {
            if (pk.absval > best_neg.absval) best_neg = pk;
        }
    }
    const detail::AcfPeak best =
        best_neg.absval > best_pos.absval + 0.02 ? best_neg : (best_pos.k ? best_pos : best_neg);
    if (best.absval < min_confidence) {
        q.confidence = best.absval;
        return q;
    }

    std::vector<double> absr(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) absr[i] = std::abs(r[i]);
    const double p1 = detail::parabolic_peak(absr, best.k);

    // second-harmonic refinement
    const std::size_t lo = static_cast<std::size_t>(1.7 * p1);
    const std::size_t hi = static_cast<std::size_t>(2.3 * p1);
    double period_samples = p1;
    if (hi < max_k) {
        detail::AcfPeak second{};
        for (const auto& pk : peaks) {
            if (pk.k >= lo && pk.k <= hi && pk.absval > second.absval) second = pk;
        }
        if (second.absval >= 0.5 * best.absval && second.k > best.k)
            period_samples = detail::parabolic_peak(absr, second.k) - p1;
    }

    q.found = true;
    q.period = period_samples / tr.sample_rate;
    q.confidence = std::min(best.absval, 1.0);
    q.sign_flipped = best.value < 0.0;
    return q;
}

namespace detail {

// centered moving average, reflect padding, O(n) via running sum
inline std::vector<double> moving_average(const std::vector<double>& x, std::size_t width) {
    if (width < 2 || x.size() < 3) return x;
    if ((width & 1u) == 0) ++width;  // force odd
    const std::size_t half = width / 2;
    const std::size_t n = x.size();
    auto at = [&](long i) -> double {
        // reflect at both ends
        if (i < 0) i = -i;
        if (i >= static_cast<long>(n)) i = 2 * static_cast<long>(n) - 2 - i;
        return x[static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(n) - 1))];
    };
    std::vector<double> out(n);
    double acc = 0.0;
    for (long j = -static_cast<long>(half); j <= static_cast<long>(half); ++j) acc += at(j);
    const double inv = 1.0 / static_cast<double>(width);
    out[0] = acc * inv;
    for (std::size_t i = 1; i < n; ++i) {
        acc += at(static_cast<long>(i + half)) - at(static_cast<long>(i) - 1 - static_cast<long>(half));
        out[i] = acc * inv;
    }
    return out;
}

} // namespace detail

struct RabiEstimate {
    bool found = false;
    double period = 0.0;         // ms
    double frequency_khz = 0.0;  // 1/period
    double confidence = 0.0;
};

// Slow Rabi-like period of a P+ (or coherence-envelope) trace: detrend, low-pass
// below the drive frequency (cascade of T and 2T zero-phase boxcars, which nulls
// every integer and half-integer drive harmonic), trim the filter transient,
// then the autocorrelation method above.
inline RabiEstimate estimate_rabi_like_period(const SampledTrace& tr, double drive_freq_khz,
                                              double min_confidence = 0.5) {
    tr.validate();
    if (!(drive_freq_khz > 0.0))
        throw config_error("estimate_rabi_like_period: drive frequency must be > 0");
    const double samples_per_period = tr.sample_rate / drive_freq_khz;
    const auto w1 = static_cast<std::size_t>(std::lround(samples_per_period)) | 1u;
    const auto w2 = static_cast<std::size_t>(std::lround(2.0 * samples_per_period)) | 1u;
    std::vector<double> lp = detail::moving_average(tr.values, w1);
    lp = detail::moving_average(lp, w2);
    const std::size_t trim = w1 / 2 + w2 / 2;
    if (lp.size() < 2 * trim + 16)
        throw insufficient_data_error("estimate_rabi_like_period: trace shorter than the filter transient");
    lp.erase(lp.begin(), lp.begin() + static_cast<long>(trim));
    lp.erase(lp.end() - static_cast<long>(trim), lp.end());

    SampledTrace slow;
    slow.sample_rate = tr.sample_rate;
    slow.t0 = tr.t0 + static_cast<double>(trim) * tr.dt();
    slow.values = std::move(lp);
    slow.label = tr.label + ":lowpass";

    // variance check: no slow component -> no-oscillation result
    double mean = 0.0, var = 0.0, raw_var = 0.0, raw_mean = 0.0;
    for (double v : slow.values) mean += v;
    mean /= static_cast<double>(slow.values.size());
    for (double v : slow.values) var += (v - mean) * (v - mean);
    for (double v : tr.values) raw_mean += v;
    raw_mean /= static_cast<double>(tr.values.size());
    for (double v : tr.values) raw_var += (v - raw_mean) * (v - raw_mean);
    RabiEstimate est;
    if (raw_var == 0.0 || var < 1e-18 * raw_var) return est;

    const double span = slow.span();
    QuasiPeriod q = find_quasi_period(slow, 0.6 * span, min_confidence);
    if (!q.found) return est;
    est.found = true;
    est.period = q.period;
    est.frequency_khz = 1.0 / q.period;
    est.confidence = q.confidence;
    return est;
}

} // namespace lzsm
