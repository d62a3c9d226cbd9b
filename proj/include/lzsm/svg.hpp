#pragma once

// Minimal decorative SVG line plot of a trajectory column vs tau. Numeric CSVs
// are the artifacts of record; this is a quick-look aid.

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "lzsm/errors.hpp"
#include "lzsm/propagate.hpp"

namespace lzsm {

inline void write_svg_plot(const std::string& path, const std::vector<double>& x,
                           const std::vector<double>& y, const std::string& title) {
    if (x.size() != y.size() || x.size() < 2) throw config_error("svg: need matching x/y series");
    const double w = 960, h = 360, ml = 50, mr = 15, mt = 25, mb = 35;
    auto [xmin_it, xmax_it] = std::minmax_element(x.begin(), x.end());
    auto [ymin_it, ymax_it] = std::minmax_element(y.begin(), y.end());
    double xmin = *xmin_it, xmax = *xmax_it, ymin = *ymin_it, ymax = *ymax_it;
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) {
        ymax += 0.5;
        ymin -= 0.5;
    }
    auto px = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double v) { return h - mb - (v - ymin) / (ymax - ymin) * (h - mt - mb); };
    std::ofstream out(path);
    if (!out) throw config_error("cannot open for writing: " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n"
        << "<rect width='100%' height='100%' fill='white'/>\n"
        << "<text x='" << w / 2 << "' y='16' text-anchor='middle' font-size='13'>" << title
        << "</text>\n";
    if (ymin < 0.0 && ymax > 0.0)
        out << "<line x1='" << ml << "' y1='" << py(0.0) << "' x2='" << w - mr << "' y2='"
            << py(0.0) << "' stroke='#bbb' stroke-width='1'/>\n";
    out << "<polyline fill='none' stroke='#c0392b' stroke-width='1' points='";
    for (std::size_t i = 0; i < x.size(); ++i) out << px(x[i]) << ',' << py(y[i]) << ' ';
    out << "'/>\n"
        << "<line x1='" << ml << "' y1='" << h - mb << "' x2='" << w - mr << "' y2='" << h - mb
        << "' stroke='black'/>\n"
        << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << h - mb
        << "' stroke='black'/>\n"
        << "<text x='" << w / 2 << "' y='" << h - 8 << "' text-anchor='middle' font-size='12'>tau</text>\n"
        << "</svg>\n";
}

} // namespace lzsm
