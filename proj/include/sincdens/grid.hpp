#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sincdens/errors.hpp"

namespace sincdens {

// Uniform evaluation grid for one axis.
struct GridAxis {
    double lower;
    double upper;
    double step;

    std::size_t size() const {
        return static_cast<std::size_t>((upper - lower) / step) + 1;
    }
    double point(std::size_t i) const { return lower + static_cast<double>(i) * step; }
};

// Product grid over d axes; discretizes sup_{x in R^d}.
struct GridSpec {
    std::vector<GridAxis> axes;

    GridSpec() = default;
    explicit GridSpec(std::vector<GridAxis> a) : axes(std::move(a)) { validate(); }
    GridSpec(double lower, double upper, double step)
        : axes{GridAxis{lower, upper, step}} { validate(); }

    void validate() const {
        if (axes.empty()) throw input_error("grid: no axes");
        for (const auto& ax : axes) {
            if (!(ax.lower < ax.upper)) throw input_error("grid: lower must be < upper");
            if (!(ax.step > 0)) throw input_error("grid: step must be > 0");
            if (ax.size() > 10'000'000) throw input_error("grid: more than 1e7 points per axis");
        }
    }

    std::size_t dimension() const { return axes.size(); }

    std::size_t total_points() const {
        std::size_t n = 1;
        for (const auto& ax : axes) n *= ax.size();
        return n;
    }

    // Point at flat index (row-major, first axis slowest).
    std::vector<double> point(std::size_t flat) const {
        std::vector<double> x(axes.size());
        for (std::size_t a = axes.size(); a-- > 0;) {
            const std::size_t m = axes[a].size();
            x[a] = axes[a].point(flat % m);
            flat /= m;
        }
        return x;
    }

    // d = 1 convenience.
    std::vector<double> points1d() const {
        if (axes.size() != 1) throw unsupported_error("points1d: grid is not one-dimensional");
        std::vector<double> xs(axes[0].size());
        for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = axes[0].point(i);
        return xs;
    }
};

}  // namespace sincdens
