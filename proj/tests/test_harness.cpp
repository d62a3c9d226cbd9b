#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "lzsm/io.hpp"
#include "lzsm/scenario.hpp"

using namespace lzsm;
using Catch::Approx;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("harness_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("config JSON round trip and validation") {
    json j = {
        {"omega_khz", 1.028},  {"omega0z_khz", 4.42},      {"omega_x_khz", 6.27},
        {"omega_z_khz", 31.79}, {"phi0z_over_pi", 0.70},    {"t_span_tau", {0.0, 9.0}},
        {"samples_per_period", 256u}, {"method", "exact"},  {"detection_axis", "x"},
        {"rtol", 1e-10},        {"atol", 1e-12},            {"initial_state", "sigma_x_plus"},
    };
    const ScenarioConfig c = config_from_json(j);
    CHECK(c.params.omega == Approx(1.028));
    CHECK(c.params.phi0z == Approx(0.70 * two_pi / 2.0));
    CHECK(c.tau1 == Approx(9.0));
    CHECK(c.samples_per_period == 256);
    const json back = config_to_json(c);
    CHECK(back["phi0z_over_pi"].get<double>() == Approx(0.70));

    SECTION("field-level error messages") {
        json bad = j;
        bad.erase("omega_khz");
        bad["detection_axis"] = "q";
        try {
            config_from_json(bad);
            FAIL("expected config_error");
        } catch (const config_error& e) {
            const std::string msg = e.what();
            CHECK(msg.find("omega_khz") != std::string::npos);
            CHECK(msg.find("detection_axis") != std::string::npos);
        }
    }
    SECTION("empty t_span rejected") {
        json bad = j;
        bad["t_span_tau"] = {1.0, 1.0};
        CHECK_THROWS_AS(config_from_json(bad), config_error);
    }
    SECTION("custom initial state") {
        json cj = j;
        cj["initial_state"] = {{"custom", {1.0, 0.0, 0.0, 0.0}}};
        const ScenarioConfig cc = config_from_json(cj);
        const SpinState s = cc.initial_state.make();
        CHECK(s.sz() == Approx(1.0));
        json badnorm = j;
        badnorm["initial_state"] = {{"custom", {1.0, 0.0, 1.0, 0.0}}};
        CHECK_THROWS_AS(config_from_json(badnorm).initial_state.make(), config_error);
    }
}

TEST_CASE("figure presets carry the caption tuples") {
    const auto& m = figure_presets();
    struct Row {
        const char* name;
        double w, w0z, ox, oz, phi_pi;
        DetectionAxis axis;
    };
    // transcribed from the figure captions
    const Row table[] = {
        {"fig2a", 3.0, 77.645, 2.06, 2.0, 0.0, DetectionAxis::Y},
        {"fig2b", 3.0, 77.645, 53.1, 146.9, 0.5, DetectionAxis::Y},
        {"fig2c", 1.028, 4.42, 6.27, 31.79, 0.70, DetectionAxis::X},
        {"fig3", 1.028, 4.42, 3.85, 20.93, 1.63, DetectionAxis::X},
        {"fig4a", 1.028, 4.42, 3.85, 20.93, 1.63, DetectionAxis::X},
        {"fig4b", 3.0, 77.645, 51.56, 96.77, 0.5, DetectionAxis::Y},
        {"fig4c", 1.03, 4.66, 4.55, 35.3, 0.0, DetectionAxis::X},
        {"fig4d", 1.028, 4.42, 6.27, 31.79, 0.70, DetectionAxis::X},
        {"fig5", 1.0, 4.197, 0.254, 4.189, 1.0, DetectionAxis::X},
    };
    REQUIRE(m.size() == std::size(table));
    for (const Row& r : table) {
        REQUIRE(m.count(r.name) == 1);
        const ScenarioConfig& c = m.at(r.name);
        CHECK(c.params.omega == Approx(r.w));
        CHECK(c.params.omega0z == Approx(r.w0z));
        CHECK(c.params.omega_x == Approx(r.ox));
        CHECK(c.params.omega_z == Approx(r.oz));
        CHECK(c.params.phi0z == Approx(r.phi_pi * two_pi / 2.0));
        CHECK(c.detection_axis == r.axis);
    }
}

TEST_CASE("trace CSV round trip") {
    TempFile f("trace.csv");
    ScenarioConfig c = figure_presets().at("fig2a");
    c.tau1 = 2.0;
    c.samples_per_period = 128;
    const Trajectory traj = run_trajectory(c);
    write_trace_csv(f.path, traj);

    const LoadedTrace lt = read_trace_csv(f.path);
    CHECK(lt.full_schema);
    REQUIRE(lt.columns.size() == 7);
    REQUIRE(lt.times.size() == traj.samples.size());
    const SampledTrace sy = lt.as_sampled("sy");
    CHECK(sy.values[10] == Approx(traj.samples[10].sy).epsilon(1e-15));
    // omega_ld column matches the field model
    const SampledTrace om = lt.as_sampled("omega_ld");
    CHECK(om.values[37] == Approx(dressed_larmor(c.params, lt.times[37])).epsilon(1e-14));

    SECTION("round trip through run_analyze") {
        AnalyzeOptions opt;
        opt.column = "sy";
        opt.drive_freq_khz = c.params.omega;
        TempFile est("est.csv");
        opt.estimates_csv = est.path;
        const RunReport rep = run_analyze(f.path, opt);
        CHECK(rep.data.contains("estimates_csv"));
        CHECK(rep.data["zero_crossings"].get<std::size_t>() > 100);
    }
}

TEST_CASE("experimental-style two-column CSV at the Cs sampling rate") {
    TempFile f("cs.csv");
    {
        std::ofstream out(f.path);
        out << "time_ms,signal\n";
        const double rate = 125.0;
        for (int i = 0; i < 1500; ++i) {
            const double t = i / rate;
            out << t << ',' << std::sin(two_pi * 4.42 * t) << '\n';
        }
    }
    AnalyzeOptions opt;
    TempFile est("est2.csv");
    opt.estimates_csv = est.path;
    const RunReport rep = run_analyze(f.path, opt);
    CHECK(rep.data["sample_rate_khz"].get<double>() == Approx(125.0).epsilon(1e-9));
    CHECK(rep.data["estimates"].get<std::size_t>() > 50);
}

TEST_CASE("malformed CSV reports the line number") {
    TempFile f("bad.csv");
    {
        std::ofstream out(f.path);
        out << "t,v\n0.0,1.0\n0.1,oops\n";
    }
    try {
        read_trace_csv(f.path);
        FAIL("expected csv_parse_error");
    } catch (const csv_parse_error& e) {
        CHECK(e.line_number == 3);
    }
}

TEST_CASE("constant-signal analysis notes the absence of crossings") {
    TempFile f("const.csv");
    {
        std::ofstream out(f.path);
        out << "t,v\n";
        for (int i = 0; i < 64; ++i) out << i * 0.01 << ",0.5\n";
    }
    const RunReport rep = run_analyze(f.path, AnalyzeOptions{});
    CHECK(rep.data["zero_crossings"].get<std::size_t>() == 0);
    CHECK(rep.data.contains("note"));
}

TEST_CASE("run_compare") {
    ScenarioConfig c = figure_presets().at("fig2a");
    c.tau1 = 2.0;
    c.samples_per_period = 128;
    TempFile f("cmp.csv");
    SECTION("identical methods give zero deviation") {
        const RunReport rep = run_compare(c, {Method::Exact, Method::Exact}, f.path);
        const json& second = rep.data["methods"][1];
        CHECK(second["max_abs"]["sx"].get<double>() == 0.0);
        CHECK(second["max_abs"]["p_plus"].get<double>() == 0.0);
    }
    SECTION("adiabatic regime: small exact-vs-adiabatic deviation") {
        const RunReport rep = run_compare(c, {Method::Exact, Method::Adiabatic}, f.path);
        const json& second = rep.data["methods"][1];
        CHECK(second["max_abs"]["sy"].get<double>() < 0.05);
    }
    SECTION("per-method failures do not abort the rest") {
        ScenarioConfig cc = c;
        cc.initial_state.sigma_x_plus = false;
        cc.initial_state.custom = SpinState{1.0, 0.0};  // adiabatic path requires sigma_x_plus
        const RunReport rep = run_compare(cc, {Method::Exact, Method::Adiabatic}, f.path);
        CHECK_FALSE(rep.data["methods"][0].contains("error"));
        CHECK(rep.data["methods"][1].contains("error"));
    }
    CHECK_THROWS_AS(run_compare(c, {Method::Exact}, f.path), config_error);
}

TEST_CASE("run_sweep") {
    ScenarioConfig c = figure_presets().at("fig2c");
    c.tau1 = 6.0;
    c.samples_per_period = 128;
    TempFile f("sweep.csv");
    SECTION("empty values rejected") {
        CHECK_THROWS_AS(run_sweep(c, "omega_z", {}, f.path), config_error);
        CHECK_THROWS_AS(run_sweep(c, "bogus", {1.0}, f.path), config_error);
    }
    SECTION("per-point failure is recorded, sweep continues") {
        const RunReport rep = run_sweep(c, "omega", {1.028, -1.0}, f.path, 2);
        CHECK(rep.data["points"][0]["status"] == "ok");
        CHECK(rep.data["points"][1]["status"] == "failed");
    }
}

TEST_CASE("simulate report carries adiabaticity and floquet validity data") {
    TempFile f("sim_trace.csv");
    ScenarioConfig c = figure_presets().at("fig3");
    c.tau1 = 2.0;
    c.samples_per_period = 64;
    c.method = Method::Floquet2;
    SimulateOptions opt;
    opt.trace_csv = f.path;
    const RunReport rep = run_simulate(c, opt);
    CHECK(rep.data["adiabaticity"]["class"] == "nonadiabatic");
    CHECK(rep.data["floquet"]["harmonic_r"].get<int>() == 4);
    CHECK(rep.data["floquet"]["delta_khz"].get<double>() == Approx(0.308));
    CHECK(rep.data["floquet"]["validity_ox_over_oz"].get<double>() == Approx(3.85 / 20.93));
}
