// lzsm: simulator and analysis toolkit for a qubit under XZ dual dressing.
//
// Subcommands: simulate, analyze, compare, sweep, presets.
// Exit codes: 0 success, 2 config error, 3 numerical failure, 4 insufficient data.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lzsm/scenario.hpp"

namespace {

lzsm::ScenarioConfig load_config(const std::string& config_path, const std::string& preset) {
    if (!preset.empty()) {
        const auto& presets = lzsm::figure_presets();
        const auto it = presets.find(preset);
        if (it == presets.end()) throw lzsm::config_error("unknown preset '" + preset + "'");
        return it->second;
    }
    if (config_path.empty()) throw lzsm::config_error("need --config FILE or --preset NAME");
    std::ifstream in(config_path);
    if (!in) throw lzsm::config_error("cannot open config: " + config_path);
    lzsm::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw lzsm::config_error(std::string("config JSON parse error: ") + e.what());
    }
    return lzsm::config_from_json(j);
}

void emit_report(const lzsm::RunReport& rep, const std::string& report_path) {
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw lzsm::config_error("cannot open for writing: " + report_path);
        out << rep.to_string() << '\n';
    }
    std::cout << rep.to_string() << std::endl;
}

std::vector<double> parse_values(const std::string& csv, const std::string& range) {
    std::vector<double> out;
    if (!range.empty()) {
        double lo = 0, hi = 0;
        int n = 0;
        if (std::sscanf(range.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 1)
            throw lzsm::config_error("--range wants lo:hi:count");
        for (int i = 0; i < n; ++i)
            out.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1));
        return out;
    }
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            out.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw lzsm::config_error("--values: cannot parse '" + cell + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"XZ dual-dressing qubit simulator and LZSM trace analysis"};
    app.require_subcommand(1);

    std::string config_path, preset, trace_csv = "trace.csv", svg_path, report_path;
    std::string method_override, axis_override, span_override;
    auto add_scenario_flags = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "scenario config JSON");
        cmd->add_option("--preset", preset, "figure preset name (see `lzsm presets`)");
        cmd->add_option("--method", method_override, "exact|adiabatic|floquet1|floquet2");
        cmd->add_option("--detection-axis", axis_override, "x|y");
        cmd->add_option("--t-span-tau", span_override, "override span, e.g. 0:12");
        cmd->add_option("--report", report_path, "also write the JSON report here");
    };

    auto* sim = app.add_subcommand("simulate", "propagate one scenario and write the trace CSV");
    add_scenario_flags(sim);
    sim->add_option("--out", trace_csv, "trajectory CSV path");
    sim->add_option("--svg", svg_path, "optional SVG quick-look plot");

    std::string analyze_input, analyze_column, estimates_csv = "estimates.csv";
    double analyze_drive = 0.0, analyze_rate = 0.0, analyze_max_lag = 0.0;
    bool verbatim = false;
    auto* ana = app.add_subcommand("analyze", "zero-crossing/period analysis of a trace CSV");
    ana->add_option("input", analyze_input, "trace CSV (full schema or time,signal columns)")
        ->required();
    ana->add_option("--column", analyze_column, "column to analyze (default sx / last)");
    ana->add_option("--drive-freq", analyze_drive, "drive frequency in kHz (enables folding and Rabi-like)");
    ana->add_option("--sample-rate", analyze_rate, "sample rate in kHz when the first column is an index");
    ana->add_option("--out", estimates_csv, "frequency-estimate CSV path");
    ana->add_option("--max-lag-tau", analyze_max_lag, "quasi-period search lag bound, drive periods");
    ana->add_flag("--eq7-verbatim", verbatim, "report f_Ld as printed in Eq. (7) (2pi/dt)");
    ana->add_option("--report", report_path, "also write the JSON report here");

    std::string methods_csv = "exact,floquet2", compare_csv = "compare.csv";
    auto* cmp = app.add_subcommand("compare", "run several methods on one grid and diff them");
    add_scenario_flags(cmp);
    cmp->add_option("--methods", methods_csv, "comma list: exact,adiabatic,floquet1,floquet2");
    cmp->add_option("--out", compare_csv, "comparison CSV path");

    std::string sweep_axis, sweep_values, sweep_range, sweep_csv = "sweep.csv";
    unsigned sweep_jobs = 0;
    auto* swp = app.add_subcommand("sweep", "independent runs across one parameter");
    add_scenario_flags(swp);
    swp->add_option("--axis", sweep_axis, "omega|omega0z|omega_x|omega_z|phi0z")->required();
    swp->add_option("--values", sweep_values, "comma list of values (kHz; phi0z in rad)");
    swp->add_option("--range", sweep_range, "lo:hi:count alternative to --values");
    swp->add_option("--out", sweep_csv, "sweep summary CSV path");
    swp->add_option("--jobs", sweep_jobs, "max concurrent simulations (default: hardware)");

    auto* pre = app.add_subcommand("presets", "list the figure presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pre->parsed()) {
            for (const auto& [name, cfg] : lzsm::figure_presets()) {
                std::printf("%-6s omega=%g omega0z=%g omega_x=%g omega_z=%g phi0z/pi=%g axis=%s span=[%g,%g]\n",
                            name.c_str(), cfg.params.omega, cfg.params.omega0z, cfg.params.omega_x,
                            cfg.params.omega_z, cfg.params.phi0z / (lzsm::two_pi / 2.0),
                            cfg.detection_axis == lzsm::DetectionAxis::X ? "x" : "y", cfg.tau0,
                            cfg.tau1);
            }
            return 0;
        }

        auto finish_config = [&](lzsm::ScenarioConfig c) {
            if (!method_override.empty()) c.method = lzsm::method_from_string(method_override);
            if (!axis_override.empty())
                c.detection_axis = (axis_override == "x" || axis_override == "X")
                                       ? lzsm::DetectionAxis::X
                                       : lzsm::DetectionAxis::Y;
            if (!span_override.empty()) {
                double a = 0, b = 0;
                if (std::sscanf(span_override.c_str(), "%lf:%lf", &a, &b) != 2)
                    throw lzsm::config_error("--t-span-tau wants tau0:tau1");
                c.tau0 = a;
                c.tau1 = b;
            }
            c.validate();
            return c;
        };

        if (sim->parsed()) {
            const lzsm::ScenarioConfig c = finish_config(load_config(config_path, preset));
            lzsm::SimulateOptions opt;
            opt.trace_csv = trace_csv;
            opt.svg_path = svg_path;
            emit_report(lzsm::run_simulate(c, opt), report_path);
        } else if (ana->parsed()) {
            lzsm::AnalyzeOptions opt;
            opt.column = analyze_column;
            opt.drive_freq_khz = analyze_drive;
            opt.sample_rate_khz = analyze_rate;
            opt.estimates_csv = estimates_csv;
            opt.max_lag_tau = analyze_max_lag;
            opt.convention = verbatim ? lzsm::FreqConvention::PaperVerbatim
                                      : lzsm::FreqConvention::HalfPeriod;
            emit_report(lzsm::run_analyze(analyze_input, opt), report_path);
        } else if (cmp->parsed()) {
            const lzsm::ScenarioConfig c = finish_config(load_config(config_path, preset));
            std::vector<lzsm::Method> methods;
            std::stringstream ss(methods_csv);
            std::string cell;
            while (std::getline(ss, cell, ',')) methods.push_back(lzsm::method_from_string(cell));
            emit_report(lzsm::run_compare(c, methods, compare_csv), report_path);
        } else if (swp->parsed()) {
            const lzsm::ScenarioConfig c = finish_config(load_config(config_path, preset));
            const std::vector<double> values = parse_values(sweep_values, sweep_range);
            emit_report(lzsm::run_sweep(c, sweep_axis, values, sweep_csv, sweep_jobs), report_path);
        }
        return 0;
    } catch (const lzsm::insufficient_data_error& e) {
        std::cerr << "insufficient data: " << e.what() << '\n';
        return 4;
    } catch (const lzsm::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const lzsm::csv_parse_error& e) {
        std::cerr << "csv parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}
