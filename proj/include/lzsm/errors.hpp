#pragma once

#include <stdexcept>
#include <string>

namespace lzsm {

// Effective field magnitude at or below the degeneracy threshold; eigenvectors
// and orientation angles are undefined there.
class degenerate_field_error : public std::domain_error {
public:
    explicit degenerate_field_error(double t)
        : std::domain_error("effective field degenerate (|h| ~ 0) at t = " + std::to_string(t) + " ms"),
          t_ms(t) {}
    double t_ms;
};

// Rotating-XZ adiabatic theory breaks down when h^R touches zero (m = 1 anti-phase case).
class exact_crossing_error : public std::domain_error {
public:
    explicit exact_crossing_error(double m)
        : std::domain_error("h^R has an exact zero crossing (m = " + std::to_string(m) +
                            "); adiabatic closed form undefined"),
          m_value(m) {}
    double m_value;
};

class integration_failure : public std::runtime_error {
public:
    explicit integration_failure(double t)
        : std::runtime_error("step size underflow at t = " + std::to_string(t) + " ms"),
          t_fail_ms(t) {}
    double t_fail_ms;
};

class insufficient_data_error : public std::runtime_error {
public:
    explicit insufficient_data_error(const std::string& what) : std::runtime_error(what) {}
};

class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

class csv_parse_error : public std::runtime_error {
public:
    csv_parse_error(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

} // namespace lzsm
