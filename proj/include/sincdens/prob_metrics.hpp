#pragma once

#include <utility>
#include <vector>

#include "sincdens/densities.hpp"
#include "sincdens/grid.hpp"

namespace sincdens {

// Finite-support distribution; small enough for exact Prokhorov by subset
// enumeration.
struct DiscreteDistribution {
    struct Atom {
        std::vector<double> location;
        double mass;
    };
    std::vector<Atom> atoms;

    explicit DiscreteDistribution(std::vector<Atom> a);
    static DiscreteDistribution univariate(std::vector<double> locations,
                                           std::vector<double> masses);
    DiscreteDistribution shifted(const std::vector<double>& by) const;
};

enum class DistanceKind { sup, l1, hellinger, kl };

DistanceKind distance_kind_from_name(const std::string& name);
std::string distance_kind_name(DistanceKind kind);

// Grid quadrature of the named distance. Hellinger is the unnormalized
// (integral (sqrt f - sqrt g)^2)^{1/2} convention, so d_H^2 <= L1 <= 2 d_H.
// KL returns +inf when g vanishes where f does not.
double density_distance(DistanceKind kind, const MixtureDensity& f, const MixtureDensity& g,
                        const GridSpec& grid);

// sup_x |F(x) - G(x)| over the grid via exact component cdfs; d = 1.
double kolmogorov_distance(const MixtureDensity& f, const MixtureDensity& g,
                           const GridSpec& grid);

// Exact Prokhorov metric between <= 12-atom discrete laws (subset brute force,
// symmetrized).
double prokhorov_exact(const DiscreteDistribution& P, const DiscreteDistribution& Q);

// Levy distance (lower bound for d_P in d = 1) by bisection over the grid.
double levy_distance(const MixtureDensity& f, const MixtureDensity& g, const GridSpec& grid);

// [Levy, Ky-Fan-of-quantile-coupling] bracket with lower <= d_P <= upper.
std::pair<double, double> prokhorov_bracket(const MixtureDensity& f, const MixtureDensity& g,
                                            const GridSpec& grid);

// Two-point cdf difference quotient (F(x+h) - F(x-h)) / (2h); d = 1.
double chae_smooth(const MixtureDensity& f, double h, double x);

struct HolderParams {
    double h;
    double beta_H;  // in (0, 1]
    double L;
};

// dK / h + 2 h^beta_H for the given bandwidth.
double holder_sup_bound(double dK, const HolderParams& params);

// Minimizing bandwidth h* = (dK / (2 beta))^{1/(beta+1)} and minimal bound.
struct HolderOptimum {
    double h_star;
    double bound;
};
HolderOptimum holder_optimal_bound(double dK, double beta_H);

}  // namespace sincdens
