#pragma once

#include <string>
#include <vector>

#include "lzsm/errors.hpp"

namespace lzsm {

// Uniformly sampled real signal, the polarimeter-style input of the analysis
// pipeline (sampling rates in the experiments: 250 kHz for Rb, 125 kHz for Cs).
struct SampledTrace {
    double sample_rate = 0.0;  // kHz = samples per ms
    double t0 = 0.0;           // ms
    std::vector<double> values;
    std::string label;

    double dt() const { return 1.0 / sample_rate; }
    double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt(); }
    double span() const { return values.empty() ? 0.0 : (values.size() - 1) * dt(); }

    void validate() const {
        if (!(sample_rate > 0.0)) throw config_error("trace: sample_rate must be > 0");
        if (values.size() < 4) throw config_error("trace: need at least 4 samples");
    }
};

} // namespace lzsm
