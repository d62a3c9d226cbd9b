#pragma once

// File formats:
//   trace CSV:    header "tau,t,sx,sy,sz,p_plus,omega_ld", full double precision
//   estimate CSV: header "t_mid,tau_mid,tau_folded,f_ld,uncertainty"
// Externally supplied traces may instead be two columns (time_ms,signal) with or
// without a header. Output is deterministic: fixed order, %.17g formatting.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lzsm/analysis.hpp"
#include "lzsm/drive.hpp"
#include "lzsm/errors.hpp"
#include "lzsm/propagate.hpp"
#include "lzsm/trace.hpp"

namespace lzsm {

namespace detail {

inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline double parse_double(const std::string& s, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw csv_parse_error("cannot parse number '" + s + "'", line_no);
    }
}

} // namespace detail

inline void write_trace_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot open for writing: " + path);
    out << "tau,t,sx,sy,sz,p_plus,omega_ld\n";
    for (const BlochSample& b : traj.samples) {
        out << detail::fmt_g17(b.tau) << ',' << detail::fmt_g17(b.t) << ','
            << detail::fmt_g17(b.sx) << ',' << detail::fmt_g17(b.sy) << ','
            << detail::fmt_g17(b.sz) << ',' << detail::fmt_g17(b.p_plus) << ','
            << detail::fmt_g17(dressed_larmor(traj.params, b.t)) << '\n';
    }
}

inline void write_estimates_csv(const std::string& path, const std::vector<FreqEstimate>& est,
                                double period_ms) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot open for writing: " + path);
    out << "t_mid,tau_mid,tau_folded,f_ld,uncertainty\n";
    for (const FreqEstimate& e : est) {
        out << detail::fmt_g17(e.t_mid) << ',' << detail::fmt_g17(e.t_mid / period_ms) << ','
            << detail::fmt_g17(e.tau_folded) << ',' << detail::fmt_g17(e.f_ld) << ','
            << detail::fmt_g17(e.uncertainty) << '\n';
    }
}

struct LoadedTrace {
    std::vector<double> times;                 // ms
    std::vector<std::vector<double>> columns;  // numeric columns as read
    std::vector<std::string> header;           // empty if the file had none
    bool full_schema = false;                  // matched the trace CSV schema

    // uniform sampling check and conversion
    SampledTrace as_sampled(const std::string& column_label) const {
        if (times.size() < 4) throw insufficient_data_error("trace file: need at least 4 samples");
        const double dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
        if (!(dt > 0.0)) throw config_error("trace file: times must be increasing");
        for (std::size_t i = 1; i < times.size(); ++i) {
            if (std::abs(times[i] - times[i - 1] - dt) > 1e-6 * dt + 1e-12)
                throw config_error("trace file: non-uniform sampling");
        }
        std::size_t col = columns.size() - 1;  // default: last column (2-column files)
        if (!header.empty()) {
            bool found = false;
            for (std::size_t c = 0; c < header.size(); ++c) {
                if (header[c] == column_label) {
                    col = c;
                    found = true;
                    break;
                }
            }
            if (full_schema && !found)
                throw config_error("trace file: no column named '" + column_label + "'");
        }
        SampledTrace tr;
        tr.sample_rate = 1.0 / dt;
        tr.t0 = times.front();
        tr.values = columns[col];
        tr.label = column_label;
        return tr;
    }
};

// Accepts the full trace schema or any headered/headerless numeric CSV whose
// first column is time in ms (sample-index columns are detected by spacing 1).
inline LoadedTrace read_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open: " + path);
    LoadedTrace lt;
    std::string line;
    std::size_t line_no = 0;
    std::size_t ncols = 0;
    std::size_t time_col = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> cells = detail::split_csv_line(line);
        if (lt.header.empty() && lt.columns.empty()) {
            // header detection: any non-numeric first row
            bool numeric = true;
            try {
                detail::parse_double(cells[0], line_no);
            } catch (const csv_parse_error&) {
                numeric = false;
            }
            if (!numeric) {
                lt.header = cells;
                ncols = cells.size();
                lt.full_schema = ncols >= 7 && cells[0] == "tau" && cells[1] == "t";
                if (lt.full_schema) time_col = 1;
                continue;
            }
        }
        if (ncols == 0) ncols = cells.size();
        if (cells.size() != ncols)
            throw csv_parse_error("expected " + std::to_string(ncols) + " columns, got " +
                                      std::to_string(cells.size()),
                                  line_no);
        if (lt.columns.empty()) lt.columns.resize(ncols);
        for (std::size_t c = 0; c < ncols; ++c)
            lt.columns[c].push_back(detail::parse_double(cells[c], line_no));
    }
    if (lt.columns.empty() || lt.columns[0].size() < 2)
        throw insufficient_data_error("trace file: no data rows in " + path);
    lt.times = lt.columns[time_col];
    return lt;
}

} // namespace lzsm
