#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sincdens/errors.hpp"

namespace sincdens {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    unsigned max_depth = 15;
};

// Adaptive Gauss-Kronrod on a finite interval. Throws numerical_error when the
// error estimate misses the requested absolute tolerance.
template <typename F>
double integrate(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
    if (a == b) return 0.0;
    double err = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, opts.max_depth, 1e-14, &err);
    if (err > opts.abs_tol && err > 1e-13 * std::abs(value)) {
        throw numerical_error("quadrature did not converge", err);
    }
    return value;
}

}  // namespace sincdens
