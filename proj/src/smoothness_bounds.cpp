#include "sincdens/smoothness_bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sincdens {

double prop1_bound(const SmoothnessClass& cls, std::size_t d, double R) {
    if (!(R > 0)) throw input_error("prop1_bound: R must be > 0");
    if (d == 0) throw input_error("prop1_bound: d must be >= 1");
    const double sigma = cls.scale;
    if (cls.tag == SmoothnessClass::Tag::supersmooth) {
        const double rpow = std::pow(R, std::max(1.0 - cls.order, 0.0));
        const double expo = cls.C1 * std::pow(sigma, cls.scale_power) * std::pow(R, cls.order);
        return cls.C * rpow / std::pow(sigma, 2.0 * static_cast<double>(d)) * std::exp(-expo);
    }
    if (!(cls.order > 1.0))
        throw input_error("prop1_bound: ordinary smooth branch requires beta > 1");
    const double sig_pow = 2.0 + 2.0 * (static_cast<double>(d) - 1.0) / cls.order;
    return cls.c / (std::pow(sigma, sig_pow) * std::pow(R, cls.order - 1.0));
}

double normal_mixture_bound(double sigma, double R) {
    if (!(sigma > 0)) throw input_error("normal_mixture_bound: sigma must be > 0");
    if (!(R > 0)) throw input_error("normal_mixture_bound: R must be > 0");
    return std::exp(-0.5 * sigma * sigma * R * R) / (std::numbers::pi * sigma * sigma * R);
}

F0Assumption check_f0_assumption(const MixtureDensity& f0, const std::vector<double>& R_list,
                                 const SmootherConfig& config) {
    if (R_list.empty()) throw input_error("check_f0_assumption: R_list is empty");
    for (std::size_t i = 0; i < R_list.size(); ++i) {
        if (!(R_list[i] > 0)) throw input_error("check_f0_assumption: R values must be > 0");
        if (i > 0 && !(R_list[i] > R_list[i - 1]))
            throw input_error("check_f0_assumption: R_list must be increasing");
    }
    F0Assumption result;
    result.R0 = R_list.front();
    result.C_bar = 0.0;
    std::vector<double> products(R_list.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(R_list.size()); ++i) {
        SmootherConfig local = config;
        local.R = R_list[static_cast<std::size_t>(i)];
        const double eps = sup_error_empirical(f0, local);
        products[static_cast<std::size_t>(i)] = local.R * eps;
    }
    for (std::size_t i = 0; i < R_list.size(); ++i) {
        result.samples.emplace_back(R_list[i], products[i] / R_list[i]);
        result.C_bar = std::max(result.C_bar, products[i]);
    }
    // Violation signature: R * eps_R increasing across the top half of the
    // list. A 5% per-step allowance keeps ordinary smooth densities, whose
    // product approaches its limit from below, out of the failure branch.
    const std::size_t half = R_list.size() / 2;
    if (R_list.size() >= 3) {
        bool increasing = true;
        for (std::size_t i = half; i + 1 < R_list.size(); ++i) {
            if (products[i + 1] <= 1.05 * products[i]) {
                increasing = false;
                break;
            }
        }
        if (increasing && half + 1 < R_list.size()) {
            std::ostringstream msg;
            msg << "f0 assumption violated: R*eps_R increasing across";
            for (std::size_t i = half; i < R_list.size(); ++i) {
                msg << " (R=" << R_list[i] << ", eps=" << result.samples[i].second << ")";
            }
            throw numerical_error(msg.str());
        }
    }
    return result;
}

}  // namespace sincdens
