#pragma once

#include <stdexcept>
#include <string>

namespace sincdens {

// Bad arguments or malformed domain objects.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Quadrature / root finding failed to reach the requested tolerance.
struct numerical_error : std::runtime_error {
    numerical_error(const std::string& msg, double achieved)
        : std::runtime_error(msg + " (achieved tolerance " + std::to_string(achieved) + ")"),
          achieved_tolerance(achieved) {}
    explicit numerical_error(const std::string& msg)
        : std::runtime_error(msg), achieved_tolerance(0) {}
    double achieved_tolerance;
};

// Operation not defined for the given inputs (e.g. d > 1 Kolmogorov).
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Config file problems; carries enough context to locate the offender.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sincdens
