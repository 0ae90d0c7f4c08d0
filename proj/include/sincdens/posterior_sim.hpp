#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sincdens/densities.hpp"
#include "sincdens/grid.hpp"
#include "sincdens/sinc_smoother.hpp"

namespace sincdens {

// Finite normal-mixture prior with a sample-size-dependent lower truncation of
// sigma^2. The truncation a_n = 1/log(n+e) makes the left tail of sigma^2
// exactly zero below a_n, which certifies the exponential tail conditions in
// closed form. truncate = false keeps the raw log-normal base as a control.
struct PriorSpec {
    std::size_t k = 5;
    double dirichlet_concentration = 1.0;
    double location_prior_sd = 3.0;
    double sigma2_log_mean = -1.0;
    double sigma2_log_sd = 0.7;
    bool truncate = true;
    std::string g_choice = "log1p";  // one of log1p, sqrt, linear
    double C1_tilde = 0.25;
    double C2_tilde = 1.0;
    double c1_bar = 0.25;
    double c2_bar = 1.0;
    double sigma2_max = 25.0;
    std::size_t griddy_nodes = 256;

    void validate() const;
    double a_n(std::size_t n) const;          // lower truncation of sigma^2
    double g(double R) const;                 // increasing, g(0)=0, g(inf)=inf
    double sigma2_cdf(double t, std::size_t n) const;  // truncated left tail
};

struct PosteriorDraw {
    std::vector<double> weights;
    std::vector<double> locations;
    double sigma2;
};

struct ConsistencyEntry {
    std::size_t n;
    double epsilon;
    double mass_estimate;
    double mc_se;
    std::size_t draws_used;
    double ess;
};

struct ConsistencyTrace {
    std::vector<ConsistencyEntry> entries;
    // populated only when McSettings::keep_draws is set; pooled per n in
    // (chain, iteration) order
    std::vector<std::vector<PosteriorDraw>> draws;
};

// Inverse of v = exp(-z/2)/z on z > 0 (strictly decreasing from +inf to 0).
double tau_inverse(double v);

enum class SmoothRegime { supersmooth, ordinary };

struct PriorTailEntry {
    double R;
    double sigma2_threshold;
    double tail_probability;
    double bound;
    bool pass;
};

struct PriorTailReport {
    std::vector<PriorTailEntry> entries;
    bool all_pass;
};

// Theorem-style tail condition checker. Supersmooth: P(sigma^2 <= C1~/R^{a/2})
// vs exp(-C2~ n g(R)); ordinary (order > 1): the sigma^{2+2(d-1)/beta} event
// converted to a sigma^2 threshold.
PriorTailReport prior_tail_check(const PriorSpec& prior, std::size_t n,
                                 const std::vector<double>& R_grid, SmoothRegime regime,
                                 double order, std::size_t d = 1);

struct KlMassEstimate {
    double estimate;
    double se;
    std::size_t hits;
};

// Monte Carlo prior mass of { f : KL(f0 || f) < epsilon }.
KlMassEstimate prior_kl_mass(const PriorSpec& prior, std::size_t n, const MixtureDensity& f0,
                             double epsilon, std::size_t draws, std::uint64_t seed,
                             const GridSpec& grid);

// One draw of (weights, locations, sigma^2) from the prior.
PosteriorDraw prior_draw(const PriorSpec& prior, std::size_t n, std::mt19937_64& rng);

MixtureDensity draw_density(const PosteriorDraw& draw);

// Data-augmentation Gibbs for the finite normal mixture; sigma^2 by griddy
// Gibbs on a log grid over [a_n, sigma2_max]. Returns post-burn-in draws.
std::vector<PosteriorDraw> run_gibbs(const std::vector<double>& data, const PriorSpec& prior,
                                     std::size_t iterations, std::size_t burn_in,
                                     std::uint64_t seed);

struct McSettings {
    std::size_t chains = 4;
    std::size_t iterations = 3000;
    std::size_t burn_in = 1000;
    std::uint64_t seed = 1;
    bool keep_draws = false;
};

// For each n: simulate data from f0, run chains, and estimate the posterior
// mass of { sup_x |f_draw - f0| > epsilon } on the smoother grid.
ConsistencyTrace consistency_trace(const MixtureDensity& f0, const std::vector<std::size_t>& n_list,
                                   double epsilon, const PriorSpec& prior,
                                   const SmootherConfig& smoother, const McSettings& mc);

}  // namespace sincdens
