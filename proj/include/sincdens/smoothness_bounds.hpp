#pragma once

#include <vector>

#include "sincdens/densities.hpp"
#include "sincdens/sinc_smoother.hpp"

namespace sincdens {

// Fitted constants of the assumption sup_x |f_{0,R} - f_0| <= C_bar / R for R >= R0.
struct F0Assumption {
    double C_bar;
    double R0;
    // the (R, eps_R) pairs the fit was based on
    std::vector<std::pair<double, double>> samples;
};

// Smoothness-class error envelope for sup |f_R - f|. Supersmooth branch:
// C * R^{max(1-alpha,0)} / sigma^{2d} * exp(-C1 * sigma^power * R^alpha);
// ordinary branch: c / (sigma^{2+2(d-1)/beta} * R^{beta-1}), beta > 1.
double prop1_bound(const SmoothnessClass& cls, std::size_t d, double R);

// Normal-mixture closed-form envelope (1 / (pi sigma^2 R)) exp(-sigma^2 R^2 / 2).
double normal_mixture_bound(double sigma, double R);

// Empirically fits C_bar = max_R (R * eps_R) over the given radii and throws
// if R * eps_R keeps growing across the top half of the list.
F0Assumption check_f0_assumption(const MixtureDensity& f0, const std::vector<double>& R_list,
                                 const SmootherConfig& config);

}  // namespace sincdens
