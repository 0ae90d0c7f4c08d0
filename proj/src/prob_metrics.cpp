#include "sincdens/prob_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sincdens {

namespace {

// Trapezoid weight of one flat grid index (product across axes).
double trapezoid_weight(const GridSpec& grid, std::size_t flat) {
    double w = 1.0;
    for (std::size_t a = grid.axes.size(); a-- > 0;) {
        const std::size_t m = grid.axes[a].size();
        const std::size_t i = flat % m;
        flat /= m;
        w *= grid.axes[a].step * ((i == 0 || i + 1 == m) ? 0.5 : 1.0);
    }
    return w;
}

template <typename F>
double grid_integral(const GridSpec& grid, F&& f) {
    const std::size_t n = grid.total_points();
    std::vector<double> terms(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        terms[idx] = trapezoid_weight(grid, idx) * f(grid.point(idx));
    }
    double total = 0.0;
    for (double t : terms) total += t;  // fixed order, reproducible
    return total;
}

void check_pair(const MixtureDensity& f, const MixtureDensity& g, const GridSpec& grid) {
    if (f.dimension() != g.dimension())
        throw input_error("density distance: dimension mismatch");
    if (grid.dimension() != f.dimension())
        throw input_error("density distance: grid dimension mismatch");
    grid.validate();
}

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// Smallest eps with P(A) <= Q(A^eps) + eps for all subsets A of P's support.
double prokhorov_one_sided(const DiscreteDistribution& P, const DiscreteDistribution& Q) {
    const std::size_t m = P.atoms.size();
    const std::size_t q = Q.atoms.size();
    std::vector<double> dist(m * q);
    std::vector<double> candidates{0.0};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            dist[i * q + j] = euclid(P.atoms[i].location, Q.atoms[j].location);
            candidates.push_back(dist[i * q + j]);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const auto num_subsets = static_cast<std::uint32_t>(1u << m);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        const double radius = candidates[ci];
        const double next = (ci + 1 < candidates.size())
                                ? candidates[ci + 1]
                                : std::numeric_limits<double>::infinity();
        // Q mass reachable from each P atom within the closed radius.
        std::vector<bool> reach(m * q);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < q; ++j) reach[i * q + j] = dist[i * q + j] <= radius;
        double needed = 0.0;
#pragma omp parallel for reduction(max : needed) schedule(static)
        for (long long s = 1; s < static_cast<long long>(num_subsets); ++s) {
            const auto mask = static_cast<std::uint32_t>(s);
            double p_mass = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) p_mass += P.atoms[i].mass;
            double q_mass = 0.0;
            for (std::size_t j = 0; j < q; ++j) {
                for (std::size_t i = 0; i < m; ++i) {
                    if ((mask & (1u << i)) && reach[i * q + j]) {
                        q_mass += Q.atoms[j].mass;
                        break;
                    }
                }
            }
            needed = std::max(needed, p_mass - q_mass);
        }
        // Q(A^eps) is constant on [radius, next); eps must also cover `needed`.
        const double eps = std::max(radius, needed);
        if (eps < next || ci + 1 == candidates.size()) best = std::min(best, eps);
    }
    return best;
}

double mixture_quantile(const MixtureDensity& f, double u) {
    double lo = -1.0, hi = 1.0;
    while (f.cdf(lo) > u) lo *= 2.0;
    while (f.cdf(hi) < u) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (f.cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> a) : atoms(std::move(a)) {
    if (atoms.empty()) throw input_error("discrete distribution: no atoms");
    if (atoms.size() > 12)
        throw unsupported_error("discrete distribution: more than 12 atoms");
    const std::size_t d = atoms.front().location.size();
    double total = 0.0;
    for (const auto& atom : atoms) {
        if (atom.location.size() != d)
            throw input_error("discrete distribution: inconsistent dimensions");
        if (!(atom.mass >= 0)) throw input_error("discrete distribution: negative mass");
        total += atom.mass;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw input_error("discrete distribution: masses must sum to 1");
}

DiscreteDistribution DiscreteDistribution::univariate(std::vector<double> locations,
                                                      std::vector<double> masses) {
    if (locations.size() != masses.size())
        throw input_error("discrete distribution: locations/masses size mismatch");
    std::vector<Atom> atoms;
    atoms.reserve(locations.size());
    for (std::size_t i = 0; i < locations.size(); ++i)
        atoms.push_back({{locations[i]}, masses[i]});
    return DiscreteDistribution(std::move(atoms));
}

DiscreteDistribution DiscreteDistribution::shifted(const std::vector<double>& by) const {
    std::vector<Atom> out = atoms;
    for (auto& atom : out) {
        if (atom.location.size() != by.size())
            throw input_error("shift: dimension mismatch");
        for (std::size_t a = 0; a < by.size(); ++a) atom.location[a] += by[a];
    }
    return DiscreteDistribution(std::move(out));
}

DistanceKind distance_kind_from_name(const std::string& name) {
    if (name == "sup") return DistanceKind::sup;
    if (name == "L1" || name == "l1") return DistanceKind::l1;
    if (name == "hellinger") return DistanceKind::hellinger;
    if (name == "KL" || name == "kl") return DistanceKind::kl;
    throw input_error("unknown distance kind: " + name);
}

std::string distance_kind_name(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::sup: return "sup";
        case DistanceKind::l1: return "L1";
        case DistanceKind::hellinger: return "hellinger";
        case DistanceKind::kl: return "KL";
    }
    return "?";
}

double density_distance(DistanceKind kind, const MixtureDensity& f, const MixtureDensity& g,
                        const GridSpec& grid) {
    check_pair(f, g, grid);
    switch (kind) {
        case DistanceKind::sup: {
            const std::size_t n = grid.total_points();
            std::vector<double> diffs(n);
#pragma omp parallel for schedule(static)
            for (long long i = 0; i < static_cast<long long>(n); ++i) {
                const auto x = grid.point(static_cast<std::size_t>(i));
                diffs[static_cast<std::size_t>(i)] = std::abs(f.pdf(x) - g.pdf(x));
            }
            double best = 0.0;
            for (double d : diffs) best = std::max(best, d);
            return best;
        }
        case DistanceKind::l1:
            return grid_integral(grid, [&](const std::vector<double>& x) {
                return std::abs(f.pdf(x) - g.pdf(x));
            });
        case DistanceKind::hellinger: {
            const double sq = grid_integral(grid, [&](const std::vector<double>& x) {
                const double d = std::sqrt(f.pdf(x)) - std::sqrt(g.pdf(x));
                return d * d;
            });
            return std::sqrt(std::max(sq, 0.0));
        }
        case DistanceKind::kl: {
            bool diverged = false;
            const double kl = grid_integral(grid, [&](const std::vector<double>& x) {
                const double fx = f.pdf(x);
                if (fx <= 0.0) return 0.0;
                const double gx = g.pdf(x);
                if (gx < 1e-300) {
                    if (fx > 1e-15) diverged = true;
                    return 0.0;
                }
                return fx * std::log(fx / gx);
            });
            if (diverged) return std::numeric_limits<double>::infinity();
            return kl;
        }
    }
    throw input_error("density_distance: unknown kind");
}

double kolmogorov_distance(const MixtureDensity& f, const MixtureDensity& g,
                           const GridSpec& grid) {
    check_pair(f, g, grid);
    if (f.dimension() != 1) throw unsupported_error("kolmogorov_distance: d = 1 only");
    double best = 0.0;
    for (double x : grid.points1d()) best = std::max(best, std::abs(f.cdf(x) - g.cdf(x)));
    return best;
}

double prokhorov_exact(const DiscreteDistribution& P, const DiscreteDistribution& Q) {
    return std::max(prokhorov_one_sided(P, Q), prokhorov_one_sided(Q, P));
}

double levy_distance(const MixtureDensity& f, const MixtureDensity& g, const GridSpec& grid) {
    check_pair(f, g, grid);
    if (f.dimension() != 1) throw unsupported_error("levy_distance: d = 1 only");
    const auto xs = grid.points1d();
    auto feasible = [&](double eps) {
        for (double x : xs) {
            if (f.cdf(x - eps) - eps > g.cdf(x)) return false;
            if (g.cdf(x) > f.cdf(x + eps) + eps) return false;
        }
        return true;
    };
    double lo = 0.0, hi = 1.0;
    if (feasible(0.0)) return 0.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::pair<double, double> prokhorov_bracket(const MixtureDensity& f, const MixtureDensity& g,
                                            const GridSpec& grid) {
    check_pair(f, g, grid);
    if (f.dimension() != 1) throw unsupported_error("prokhorov_bracket: d = 1 only");
    const double lower = levy_distance(f, g, grid);

    // Ky Fan distance of the quantile coupling.
    const std::size_t n_u = 4001;
    std::vector<double> diffs(n_u);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n_u); ++i) {
        const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(n_u);
        diffs[static_cast<std::size_t>(i)] =
            std::abs(mixture_quantile(f, u) - mixture_quantile(g, u));
    }
    auto feasible = [&](double eps) {
        std::size_t exceed = 0;
        for (double d : diffs)
            if (d > eps) ++exceed;
        return static_cast<double>(exceed) / static_cast<double>(n_u) <= eps;
    };
    double lo = 0.0, hi = 1.0;
    for (double d : diffs) hi = std::max(hi, d);
    if (feasible(0.0)) return {lower, std::max(lower, 0.0)};
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
    }
    return {lower, std::max(hi, lower)};
}

double chae_smooth(const MixtureDensity& f, double h, double x) {
    if (f.dimension() != 1) throw unsupported_error("chae_smooth: d = 1 only");
    if (!(h > 0)) throw input_error("chae_smooth: h must be > 0");
    return (f.cdf(x + h) - f.cdf(x - h)) / (2.0 * h);
}

double holder_sup_bound(double dK, const HolderParams& params) {
    if (!(dK >= 0)) throw input_error("holder_sup_bound: dK must be >= 0");
    if (!(params.h > 0)) throw input_error("holder_sup_bound: h must be > 0");
    if (!(params.beta_H > 0) || params.beta_H > 1.0)
        throw input_error("holder_sup_bound: beta_H must be in (0, 1]");
    return dK / params.h + 2.0 * std::pow(params.h, params.beta_H);
}

HolderOptimum holder_optimal_bound(double dK, double beta_H) {
    if (!(dK >= 0)) throw input_error("holder_optimal_bound: dK must be >= 0");
    if (!(beta_H > 0) || beta_H > 1.0)
        throw input_error("holder_optimal_bound: beta_H must be in (0, 1]");
    if (dK == 0.0) {
        // bound 2 h^beta has no interior minimum; it vanishes as h -> 0
        return {0.0, 0.0};
    }
    const double h_star = std::pow(dK / (2.0 * beta_H), 1.0 / (beta_H + 1.0));
    return {h_star, holder_sup_bound(dK, {h_star, beta_H, 1.0})};
}

}  // namespace sincdens
