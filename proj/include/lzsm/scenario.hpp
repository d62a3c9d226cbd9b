#pragma once

// Scenario configuration (JSON), the figure presets with the caption parameter
// tuples, and the run operations behind the CLI subcommands. Configs carry
// phi0z in units of pi, matching the captions ("Phi_0z = 0.70 pi").

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lzsm/adiabatic.hpp"
#include "lzsm/analysis.hpp"
#include "lzsm/drive.hpp"
#include "lzsm/errors.hpp"
#include "lzsm/floquet.hpp"
#include "lzsm/io.hpp"
#include "lzsm/propagate.hpp"
#include "lzsm/svg.hpp"

namespace lzsm {

using json = nlohmann::json;

struct InitialState {
    bool sigma_x_plus = true;
    SpinState custom;  // used when !sigma_x_plus

    SpinState make() const {
        if (sigma_x_plus) return prepare_sigma_x_eigenstate();
        const double n2 = custom.norm2();
        if (std::abs(n2 - 1.0) > 1e-9)
            throw config_error("initial_state: custom amplitudes must be normalized");
        return custom;
    }
};

struct ScenarioConfig {
    DriveParams params;
    InitialState initial_state;
    double tau0 = 0.0, tau1 = 8.0;
    std::size_t samples_per_period = 512;
    Method method = Method::Exact;
    ToleranceSpec tol;
    DetectionAxis detection_axis = DetectionAxis::X;

    void validate() const {
        params.validated();
        if (!(tau1 > tau0)) throw config_error("t_span_tau: need tau1 > tau0 (non-empty span)");
        if (samples_per_period < 2) throw config_error("samples_per_period: need >= 2");
        if (!(tol.rtol > 0.0) || !(tol.atol > 0.0)) throw config_error("rtol/atol must be > 0");
    }
};

inline Method method_from_string(const std::string& s) {
    if (s == "exact") return Method::Exact;
    if (s == "adiabatic") return Method::Adiabatic;
    if (s == "floquet1") return Method::Floquet1;
    if (s == "floquet2") return Method::Floquet2;
    throw config_error("method: unknown '" + s + "' (exact|adiabatic|floquet1|floquet2)");
}

inline ScenarioConfig config_from_json(const json& j) {
    ScenarioConfig c;
    std::vector<std::string> errors;
    auto need_number = [&](const char* key, double& dst, bool required) {
        if (!j.contains(key)) {
            if (required) errors.push_back(std::string(key) + ": missing");
            return;
        }
        if (!j[key].is_number()) {
            errors.push_back(std::string(key) + ": must be a number");
            return;
        }
        dst = j[key].get<double>();
    };
    need_number("omega_khz", c.params.omega, true);
    need_number("omega0z_khz", c.params.omega0z, true);
    need_number("omega_x_khz", c.params.omega_x, true);
    need_number("omega_z_khz", c.params.omega_z, true);
    double phi_over_pi = 0.0;
    need_number("phi0z_over_pi", phi_over_pi, true);
    c.params.phi0z = phi_over_pi * two_pi / 2.0;

    if (j.contains("t_span_tau")) {
        if (!j["t_span_tau"].is_array() || j["t_span_tau"].size() != 2 ||
            !j["t_span_tau"][0].is_number() || !j["t_span_tau"][1].is_number()) {
            errors.push_back("t_span_tau: must be [tau0, tau1]");
        } else {
            c.tau0 = j["t_span_tau"][0].get<double>();
            c.tau1 = j["t_span_tau"][1].get<double>();
        }
    }
    if (j.contains("samples_per_period")) {
        if (!j["samples_per_period"].is_number_unsigned())
            errors.push_back("samples_per_period: must be a positive integer");
        else
            c.samples_per_period = j["samples_per_period"].get<std::size_t>();
    }
    if (j.contains("method")) {
        try {
            c.method = method_from_string(j["method"].get<std::string>());
        } catch (const std::exception& e) {
            errors.push_back(e.what());
        }
    }
    if (j.contains("detection_axis")) {
        const std::string a = j["detection_axis"].get<std::string>();
        if (a == "x" || a == "X")
            c.detection_axis = DetectionAxis::X;
        else if (a == "y" || a == "Y")
            c.detection_axis = DetectionAxis::Y;
        else
            errors.push_back("detection_axis: must be x or y");
    }
    if (j.contains("rtol")) need_number("rtol", c.tol.rtol, false);
    if (j.contains("atol")) need_number("atol", c.tol.atol, false);
    if (j.contains("initial_state")) {
        const json& s = j["initial_state"];
        if (s.is_string() && s.get<std::string>() == "sigma_x_plus") {
            c.initial_state.sigma_x_plus = true;
        } else if (s.is_object() && s.contains("custom") && s["custom"].is_array() &&
                   s["custom"].size() == 4) {
            c.initial_state.sigma_x_plus = false;
            c.initial_state.custom.c_up = cplx(s["custom"][0].get<double>(), s["custom"][1].get<double>());
            c.initial_state.custom.c_down = cplx(s["custom"][2].get<double>(), s["custom"][3].get<double>());
        } else {
            errors.push_back("initial_state: 'sigma_x_plus' or {\"custom\": [re_up, im_up, re_dn, im_dn]}");
        }
    }
    if (!errors.empty()) {
        std::string msg = "invalid config:";
        for (const std::string& e : errors) msg += "\n  - " + e;
        throw config_error(msg);
    }
    try {
        c.validate();
    } catch (const config_error& e) {
        throw config_error(std::string("invalid config:\n  - ") + e.what());
    }
    return c;
}

inline json config_to_json(const ScenarioConfig& c) {
    json j;
    j["omega_khz"] = c.params.omega;
    j["omega0z_khz"] = c.params.omega0z;
    j["omega_x_khz"] = c.params.omega_x;
    j["omega_z_khz"] = c.params.omega_z;
    j["phi0z_over_pi"] = c.params.phi0z / (two_pi / 2.0);
    j["t_span_tau"] = {c.tau0, c.tau1};
    j["samples_per_period"] = c.samples_per_period;
    j["method"] = method_name(c.method);
    j["detection_axis"] = c.detection_axis == DetectionAxis::X ? "x" : "y";
    j["rtol"] = c.tol.rtol;
    j["atol"] = c.tol.atol;
    j["initial_state"] =
        c.initial_state.sigma_x_plus
            ? json("sigma_x_plus")
            : json{{"custom",
                    {c.initial_state.custom.c_up.real(), c.initial_state.custom.c_up.imag(),
                     c.initial_state.custom.c_down.real(), c.initial_state.custom.c_down.imag()}}};
    return j;
}

// Figure presets: the caption parameter tuples (omega, omega0z, Ox, Oz, Phi0z/pi)
// and the detection axis of the experiment shown (Rb monitors <sy>, Cs <sx>).
inline const std::map<std::string, ScenarioConfig>& figure_presets() {
    static const std::map<std::string, ScenarioConfig> presets = [] {
        std::map<std::string, ScenarioConfig> m;
        auto mk = [](double w, double w0z, double ox, double oz, double phi_over_pi,
                     DetectionAxis ax, double tau1) {
            ScenarioConfig c;
            c.params = DriveParams{w, w0z, ox, oz, phi_over_pi * two_pi / 2.0}.validated();
            c.detection_axis = ax;
            c.tau1 = tau1;
            return c;
        };
        m["fig2a"] = mk(3.0, 77.645, 2.06, 2.0, 0.0, DetectionAxis::Y, 8.0);
        m["fig2b"] = mk(3.0, 77.645, 53.1, 146.9, 0.5, DetectionAxis::Y, 8.0);
        m["fig2c"] = mk(1.028, 4.42, 6.27, 31.79, 0.70, DetectionAxis::X, 9.0);
        m["fig3"] = mk(1.028, 4.42, 3.85, 20.93, 1.63, DetectionAxis::X, 8.0);
        m["fig4a"] = mk(1.028, 4.42, 3.85, 20.93, 1.63, DetectionAxis::X, 10.0);
        m["fig4b"] = mk(3.0, 77.645, 51.56, 96.77, 0.5, DetectionAxis::Y, 10.0);
        m["fig4c"] = mk(1.03, 4.66, 4.55, 35.3, 0.0, DetectionAxis::X, 10.0);
        m["fig4d"] = mk(1.028, 4.42, 6.27, 31.79, 0.70, DetectionAxis::X, 10.0);
        m["fig5"] = mk(1.0, 4.197, 0.254, 4.189, 1.0, DetectionAxis::X, 24.0);
        return m;
    }();
    return presets;
}

// trajectory by the configured method on the configured grid
inline Trajectory run_trajectory(const ScenarioConfig& c) {
    c.validate();
    const SpinState psi0 = c.initial_state.make();
    switch (c.method) {
        case Method::Exact:
            return evolve_tau(c.params, psi0, c.tau0, c.tau1, c.samples_per_period, c.tol);
        case Method::Floquet1:
        case Method::Floquet2: {
            const double T = c.params.period_ms();
            const std::size_t n = static_cast<std::size_t>(std::llround(
                                      (c.tau1 - c.tau0) * static_cast<double>(c.samples_per_period))) + 1;
            std::vector<double> ts(n);
            const double dt = (c.tau1 - c.tau0) * T / static_cast<double>(n - 1);
            for (std::size_t i = 0; i < n; ++i) ts[i] = c.tau0 * T + dt * static_cast<double>(i);
            return propagate_floquet(c.params, FrameSpec::for_params(c.params), psi0, ts,
                                     c.method == Method::Floquet1 ? 1 : 2);
        }
        case Method::Adiabatic: {
            if (!c.initial_state.sigma_x_plus)
                throw config_error("adiabatic method requires the sigma_x_plus initial state");
            const std::size_t n = static_cast<std::size_t>(std::llround(
                                      (c.tau1 - c.tau0) * static_cast<double>(c.samples_per_period))) + 1;
            std::vector<double> taus(n);
            const double dtau = (c.tau1 - c.tau0) / static_cast<double>(n - 1);
            for (std::size_t i = 0; i < n; ++i) taus[i] = c.tau0 + dtau * static_cast<double>(i);
            const AdiabaticSeries s = general_adiabatic_estimate(c.params, taus);
            Trajectory traj;
            traj.params = c.params;
            traj.method = Method::Adiabatic;
            traj.tol = c.tol;
            const double T = c.params.period_ms();
            traj.grid.resize(n);
            traj.samples.resize(n);
            traj.states.resize(n);
            const double p_plus_frozen = 0.5 * (1.0 + std::sin(s.theta0));  // adiabatic occupation is constant
            for (std::size_t i = 0; i < n; ++i) {
                traj.grid[i] = taus[i] * T;
                BlochSample& b = traj.samples[i];
                b.t = traj.grid[i];
                b.tau = taus[i];
                b.sx = s.sx[i];
                b.sy = s.sy[i];
                b.sz = s.sz[i];
                b.p_plus = p_plus_frozen;
            }
            return traj;
        }
    }
    throw config_error("unknown method");
}

struct RunReport {
    json data;
    std::string to_string() const { return data.dump(2); }
};

struct SimulateOptions {
    std::string trace_csv = "trace.csv";
    std::string svg_path;  // empty: no plot
};

inline RunReport run_simulate(const ScenarioConfig& c, const SimulateOptions& opt) {
    const auto t_start = std::chrono::steady_clock::now();
    const Trajectory traj = run_trajectory(c);
    write_trace_csv(opt.trace_csv, traj);
    if (!opt.svg_path.empty()) {
        std::vector<double> xs, ys;
        xs.reserve(traj.samples.size());
        ys.reserve(traj.samples.size());
        for (const BlochSample& b : traj.samples) {
            xs.push_back(b.tau);
            ys.push_back(c.detection_axis == DetectionAxis::X ? b.sx : b.sy);
        }
        write_svg_plot(opt.svg_path, xs, ys,
                       std::string("&lt;sigma_") +
                           (c.detection_axis == DetectionAxis::X ? "x" : "y") + "&gt; (" +
                           method_name(c.method) + ")");
    }
    const AdiabaticityReport ad = classify_adiabaticity(c.params);
    RunReport rep;
    rep.data["config"] = config_to_json(c);
    rep.data["trajectory_csv"] = opt.trace_csv;
    if (!opt.svg_path.empty()) rep.data["svg"] = opt.svg_path;
    rep.data["adiabaticity"] = {
        {"class", ad.cls == AdiabaticityClass::Adiabatic ? "adiabatic" : "nonadiabatic"},
        {"drive_scale_khz2", ad.drive_scale},
        {"gap_scale_khz2", ad.gap_scale},
    };
    if (c.method == Method::Floquet1 || c.method == Method::Floquet2) {
        const FrameSpec spec = FrameSpec::for_params(c.params);
        const EffectiveModel m =
            effective_hamiltonian(c.params, fourier_H(c.params, spec),
                                  c.method == Method::Floquet1 ? 1 : 2);
        rep.data["floquet"] = {
            {"harmonic_r", spec.r},
            {"delta_khz", spec.delta},
            {"n_max", spec.n_max},
            {"heff_splitting_khz", m.splitting_khz()},
            {"validity_ox_over_oz", m.ox_over_oz},
            {"validity_delta_over_oz", m.delta_over_oz},
        };
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t_start).count();
    rep.data["elapsed_ms"] = ms;
    rep.data["units"] = {{"frequency", "kHz (ordinary)"}, {"time", "ms"}, {"phase", "rad"}};
    return rep;
}

struct AnalyzeOptions {
    std::string column = "";          // default: detection column of the schema / last column
    double drive_freq_khz = 0.0;      // 0: unknown -> skip Rabi-like estimate and folding
    double sample_rate_khz = 0.0;     // override for index-based files
    std::string estimates_csv = "estimates.csv";
    FreqConvention convention = FreqConvention::HalfPeriod;
    double max_lag_tau = 0.0;         // 0: half the span
};

inline RunReport run_analyze(const std::string& input_csv, const AnalyzeOptions& opt) {
    const auto t_start = std::chrono::steady_clock::now();
    LoadedTrace lt = read_trace_csv(input_csv);
    if (opt.sample_rate_khz > 0.0) {
        // reinterpret the first column as a sample index
        const double dt = 1.0 / opt.sample_rate_khz;
        for (std::size_t i = 0; i < lt.times.size(); ++i)
            lt.times[i] = static_cast<double>(i) * dt;
    }
    std::string column = opt.column;
    if (column.empty()) column = lt.full_schema ? "sx" : "signal";
    SampledTrace tr = lt.as_sampled(column);

    RunReport rep;
    rep.data["input"] = input_csv;
    rep.data["column"] = tr.label;
    rep.data["samples"] = tr.values.size();
    rep.data["sample_rate_khz"] = tr.sample_rate;

    const std::vector<double> crossings = detect_zero_crossings(tr);
    rep.data["zero_crossings"] = crossings.size();
    if (crossings.size() < 2) {
        rep.data["note"] = "fewer than 2 zero crossings: no frequency estimates";
    } else {
        std::vector<FreqEstimate> est =
            estimate_dressed_frequency(crossings, tr.dt(), opt.convention);
        double period_ms = opt.drive_freq_khz > 0.0 ? 1.0 / opt.drive_freq_khz : 0.0;
        if (period_ms > 0.0) est = fold_to_floquet_zone(std::move(est), period_ms);
        write_estimates_csv(opt.estimates_csv, est, period_ms > 0.0 ? period_ms : 1.0);
        rep.data["estimates_csv"] = opt.estimates_csv;
        rep.data["estimates"] = est.size();
        rep.data["f_ld_units"] =
            opt.convention == FreqConvention::HalfPeriod ? "kHz" : "rad/ms (Eq. 7 verbatim)";
    }

    const double span = tr.span();
    const double max_lag = opt.max_lag_tau > 0.0 && opt.drive_freq_khz > 0.0
                               ? opt.max_lag_tau / opt.drive_freq_khz
                               : 0.5 * span;
    const QuasiPeriod q = find_quasi_period(tr, max_lag);
    if (q.found) {
        rep.data["quasi_period"] = {
            {"period_ms", q.period},
            {"confidence", q.confidence},
            {"sign_flipped", q.sign_flipped},
        };
        if (opt.drive_freq_khz > 0.0)
            rep.data["quasi_period"]["period_tau"] = q.period * opt.drive_freq_khz;
    } else {
        rep.data["quasi_period"] = {{"found", false}, {"confidence", q.confidence}};
    }
    if (opt.drive_freq_khz > 0.0) {
        try {
            const RabiEstimate rl = estimate_rabi_like_period(tr, opt.drive_freq_khz);
            if (rl.found) {
                rep.data["rabi_like"] = {
                    {"period_ms", rl.period},
                    {"period_tau", rl.period * opt.drive_freq_khz},
                    {"frequency_khz", rl.frequency_khz},
                    {"confidence", rl.confidence},
                };
            } else {
                rep.data["rabi_like"] = {{"found", false}};
            }
        } catch (const insufficient_data_error& e) {
            rep.data["rabi_like"] = {{"found", false}, {"note", e.what()}};
        }
    }
    rep.data["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - t_start).count();
    return rep;
}

// run several methods on the identical grid; per-sample deviation columns and
// max/mean summaries against the first method
inline RunReport run_compare(const ScenarioConfig& base, const std::vector<Method>& methods,
                             const std::string& out_csv) {
    if (methods.size() < 2) throw config_error("compare: need at least 2 methods");
    std::vector<Trajectory> trajs;
    std::vector<std::string> failures(methods.size());
    for (std::size_t i = 0; i < methods.size(); ++i) {
        ScenarioConfig c = base;
        c.method = methods[i];
        try {
            trajs.push_back(run_trajectory(c));
        } catch (const std::exception& e) {
            failures[i] = e.what();
            trajs.emplace_back();  // placeholder
        }
    }
    const Trajectory* ref = nullptr;
    for (std::size_t i = 0; i < methods.size(); ++i)
        if (failures[i].empty()) {
            ref = &trajs[i];
            break;
        }
    if (!ref) throw config_error("compare: every method failed");

    RunReport rep;
    rep.data["config"] = config_to_json(base);
    rep.data["methods"] = json::array();
    std::ofstream out(out_csv);
    if (!out) throw config_error("cannot open for writing: " + out_csv);
    out << "tau";
    for (std::size_t i = 0; i < methods.size(); ++i)
        if (failures[i].empty())
            out << ",sx_" << method_name(methods[i]) << ",sy_" << method_name(methods[i])
                << ",p_plus_" << method_name(methods[i]);
    out << "\n";
    for (std::size_t k = 0; k < ref->samples.size(); ++k) {
        out << detail::fmt_g17(ref->samples[k].tau);
        for (std::size_t i = 0; i < methods.size(); ++i) {
            if (!failures[i].empty()) continue;
            const BlochSample& b = trajs[i].samples[k];
            out << ',' << detail::fmt_g17(b.sx) << ',' << detail::fmt_g17(b.sy) << ','
                << detail::fmt_g17(b.p_plus);
        }
        out << '\n';
    }
    for (std::size_t i = 0; i < methods.size(); ++i) {
        json m;
        m["method"] = method_name(methods[i]);
        if (!failures[i].empty()) {
            m["error"] = failures[i];
        } else if (&trajs[i] != ref) {
            double mx_sx = 0, mx_sy = 0, mx_pp = 0, mn_sx = 0, mn_sy = 0, mn_pp = 0;
            for (std::size_t k = 0; k < ref->samples.size(); ++k) {
                const BlochSample& a = trajs[i].samples[k];
                const BlochSample& b = ref->samples[k];
                mx_sx = std::max(mx_sx, std::abs(a.sx - b.sx));
                mx_sy = std::max(mx_sy, std::abs(a.sy - b.sy));
                mx_pp = std::max(mx_pp, std::abs(a.p_plus - b.p_plus));
                mn_sx += std::abs(a.sx - b.sx);
                mn_sy += std::abs(a.sy - b.sy);
                mn_pp += std::abs(a.p_plus - b.p_plus);
            }
            const double n = static_cast<double>(ref->samples.size());
            m["deviation_vs"] = method_name(ref->method);
            m["max_abs"] = {{"sx", mx_sx}, {"sy", mx_sy}, {"p_plus", mx_pp}};
            m["mean_abs"] = {{"sx", mn_sx / n}, {"sy", mn_sy / n}, {"p_plus", mn_pp / n}};
        } else {
            m["role"] = "reference";
        }
        rep.data["methods"].push_back(m);
    }
    rep.data["comparison_csv"] = out_csv;
    return rep;
}

// independent simulations across one swept parameter; per-point failures are
// recorded and the sweep continues
inline RunReport run_sweep(const ScenarioConfig& base, const std::string& axis,
                           const std::vector<double>& values, const std::string& out_csv,
                           unsigned jobs = 0) {
    if (values.empty()) throw config_error("sweep: empty values list");
    auto apply_axis = [&](ScenarioConfig c, double v) {
        if (axis == "omega")
            c.params.omega = v;
        else if (axis == "omega0z")
            c.params.omega0z = v;
        else if (axis == "omega_x")
            c.params.omega_x = v;
        else if (axis == "omega_z")
            c.params.omega_z = v;
        else if (axis == "phi0z")
            c.params.phi0z = v;
        else
            throw config_error("sweep: unknown axis '" + axis +
                               "' (omega|omega0z|omega_x|omega_z|phi0z)");
        return c;
    };
    apply_axis(base, values[0]);  // validate the axis name up front

    struct Point {
        double value = 0.0;
        bool ok = false;
        std::string error;
        double quasi_period_tau = 0.0, quasi_conf = 0.0;
        double rabi_period_tau = 0.0, rabi_freq_khz = 0.0;
        std::string adiabaticity;
    };
    std::vector<Point> points(values.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= values.size()) return;
            Point& pt = points[i];
            pt.value = values[i];
            try {
                const ScenarioConfig c = apply_axis(base, values[i]);
                c.validate();
                const Trajectory traj = run_trajectory(c);
                const SampledTrace tr = projected_signal(traj, c.detection_axis);
                pt.adiabaticity = classify_adiabaticity(c.params).cls == AdiabaticityClass::Adiabatic
                                      ? "adiabatic"
                                      : "nonadiabatic";
                const QuasiPeriod q = find_quasi_period(tr, 0.5 * tr.span());
                if (q.found) {
                    pt.quasi_period_tau = q.period * c.params.omega;
                    pt.quasi_conf = q.confidence;
                }
                SampledTrace pp = tr;
                pp.values.clear();
                for (const BlochSample& b : traj.samples) pp.values.push_back(b.p_plus);
                try {
                    const RabiEstimate rl = estimate_rabi_like_period(pp, c.params.omega);
                    if (rl.found) {
                        pt.rabi_period_tau = rl.period * c.params.omega;
                        pt.rabi_freq_khz = rl.frequency_khz;
                    }
                } catch (const insufficient_data_error&) {
                    // span too short for the slow-envelope filter: leave fields empty
                }
                pt.ok = true;
            } catch (const std::exception& e) {
                pt.error = e.what();
            }
        }
    };
    unsigned n_jobs = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    n_jobs = std::min<unsigned>(n_jobs, static_cast<unsigned>(values.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < n_jobs; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    std::ofstream out(out_csv);
    if (!out) throw config_error("cannot open for writing: " + out_csv);
    out << axis << ",status,adiabaticity,quasi_period_tau,quasi_confidence,rabi_period_tau,"
           "rabi_frequency_khz\n";
    for (const Point& pt : points) {
        out << detail::fmt_g17(pt.value) << ',' << (pt.ok ? "ok" : "failed") << ','
            << pt.adiabaticity << ',' << detail::fmt_g17(pt.quasi_period_tau) << ','
            << detail::fmt_g17(pt.quasi_conf) << ',' << detail::fmt_g17(pt.rabi_period_tau) << ','
            << detail::fmt_g17(pt.rabi_freq_khz) << '\n';
    }
    RunReport rep;
    rep.data["config"] = config_to_json(base);
    rep.data["axis"] = axis;
    rep.data["sweep_csv"] = out_csv;
    rep.data["points"] = json::array();
    for (const Point& pt : points) {
        json pj;
        pj["value"] = pt.value;
        pj["status"] = pt.ok ? "ok" : "failed";
        if (!pt.ok) pj["error"] = pt.error;
        rep.data["points"].push_back(pj);
    }
    return rep;
}

} // namespace lzsm
