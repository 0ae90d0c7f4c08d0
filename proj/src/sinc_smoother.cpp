#include "sincdens/sinc_smoother.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sincdens {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(Ru)/u with a two-term series past the removable singularity.
double sinc_ratio(double u, double R) {
    const double ru = R * u;
    if (std::abs(ru) < 1e-4) {
        return R * (1.0 - ru * ru / 6.0);
    }
    return std::sin(ru) / u;
}

double closed_form_at(const MixtureDensity& density, const SmootherConfig& config,
                      const std::vector<double>& x) {
    double total = 0.0;
    const auto& locs = density.locations();
    const auto& w = density.weights();
    for (std::size_t j = 0; j < w.size(); ++j) {
        double comp = 1.0;
        for (std::size_t a = 0; a < x.size(); ++a) {
            comp *= gaussian_J(x[a], locs[j][a], density.scale(), config.R, config.quadrature) / kPi;
        }
        total += w[j] * comp;
    }
    return total;
}

// Truncated inverse Fourier transform. d = 1 integrates the full mixture
// characteristic function in one adaptive pass; higher dimensions factorize
// per component and axis (the kernel CF is a product across axes).
double spectral_at(const MixtureDensity& density, const SmootherConfig& config,
                   const std::vector<double>& x) {
    const auto& locs = density.locations();
    const auto& w = density.weights();
    const double sigma = density.scale();
    if (x.size() == 1) {
        auto integrand = [&](double t) {
            const double kappa = density.kernel_cf(sigma * t);
            double sum = 0.0;
            for (std::size_t j = 0; j < w.size(); ++j) {
                sum += w[j] * std::cos(t * (x[0] - locs[j][0]));
            }
            return kappa * sum;
        };
        return integrate(integrand, 0.0, config.R, config.quadrature) / kPi;
    }
    double total = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        double comp = 1.0;
        for (std::size_t a = 0; a < x.size(); ++a) {
            const double delta = x[a] - locs[j][a];
            auto integrand = [&](double t) {
                return density.kernel_cf(sigma * t) * std::cos(t * delta);
            };
            comp *= integrate(integrand, 0.0, config.R, config.quadrature) / kPi;
        }
        total += w[j] * comp;
    }
    return total;
}

SmoothPath resolve_path(const MixtureDensity& density, SmoothPath path) {
    if (path == SmoothPath::automatic) {
        return density.family() == Family::gaussian ? SmoothPath::closed_form
                                                    : SmoothPath::spectral;
    }
    return path;
}

template <typename PointFn>
std::vector<double> grid_map(const GridSpec& grid, bool parallel, PointFn&& fn) {
    const std::size_t n = grid.total_points();
    std::vector<double> out(n);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            out[static_cast<std::size_t>(i)] = fn(grid.point(static_cast<std::size_t>(i)));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(grid.point(i));
    }
    return out;
}

// Serial scan; ties resolved by first index.
double max_of(const std::vector<double>& v) {
    double best = 0.0;
    for (double x : v) {
        if (x > best) best = x;
    }
    return best;
}

double sup_error_impl(const MixtureDensity& density, const SmootherConfig& config,
                      bool parallel) {
    config.validate();
    if (config.grid.dimension() != density.dimension())
        throw input_error("sup_error: grid/density dimension mismatch");
    auto errs = grid_map(config.grid, parallel, [&](const std::vector<double>& x) {
        return std::abs(smooth_at(density, config, x) - density.pdf(x));
    });
    return max_of(errs);
}

}  // namespace

SmootherConfig SmootherConfig::for_density(const MixtureDensity& density, double R) {
    double mu_min = density.locations()[0][0];
    double mu_max = mu_min;
    for (const auto& mu : density.locations()) {
        for (double m : mu) {
            mu_min = std::min(mu_min, m);
            mu_max = std::max(mu_max, m);
        }
    }
    SmootherConfig cfg;
    cfg.R = R;
    cfg.dimension = density.dimension();
    const double s = density.scale();
    GridAxis axis{mu_min - 10.0 * s, mu_max + 10.0 * s, 0.005 * s};
    cfg.grid = GridSpec(std::vector<GridAxis>(density.dimension(), axis));
    cfg.validate();
    return cfg;
}

double sinc_kernel(const std::vector<double>& u, double R) {
    if (!(R > 0)) throw input_error("sinc_kernel: R must be > 0");
    double prod = 1.0;
    for (double uj : u) {
        if (!std::isfinite(uj)) throw input_error("sinc_kernel: non-finite input");
        prod *= sinc_ratio(uj, R) / kPi;
    }
    return prod;
}

double gaussian_J(double y, double mu, double sigma, double R, const QuadratureOptions& opts) {
    if (!(sigma > 0)) throw input_error("gaussian_J: sigma must be > 0");
    if (R < 0) throw input_error("gaussian_J: R must be >= 0");
    if (!std::isfinite(y) || !std::isfinite(mu)) throw input_error("gaussian_J: non-finite input");
    if (R == 0.0) return 0.0;
    const double delta = y - mu;
    auto integrand = [=](double s) {
        return std::exp(-0.5 * sigma * sigma * s * s) * std::cos(s * delta);
    };
    return integrate(integrand, 0.0, R, opts);
}

double smooth_at(const MixtureDensity& density, const SmootherConfig& config,
                 const std::vector<double>& x, SmoothPath path) {
    if (x.size() != density.dimension()) throw input_error("smooth_at: dimension mismatch");
    path = resolve_path(density, path);
    if (path == SmoothPath::closed_form) {
        if (density.family() != Family::gaussian)
            throw unsupported_error("smooth_at: closed form requires a Gaussian mixture");
        return closed_form_at(density, config, x);
    }
    return spectral_at(density, config, x);
}

std::vector<double> smooth_on_grid(const MixtureDensity& density, const SmootherConfig& config,
                                   SmoothPath path) {
    config.validate();
    return grid_map(config.grid, true,
                    [&](const std::vector<double>& x) { return smooth_at(density, config, x, path); });
}

std::vector<double> smooth_on_grid_serial(const MixtureDensity& density,
                                          const SmootherConfig& config, SmoothPath path) {
    config.validate();
    return grid_map(config.grid, false,
                    [&](const std::vector<double>& x) { return smooth_at(density, config, x, path); });
}

double sup_error_empirical(const MixtureDensity& density, const SmootherConfig& config) {
    return sup_error_impl(density, config, true);
}

double sup_error_empirical_serial(const MixtureDensity& density, const SmootherConfig& config) {
    return sup_error_impl(density, config, false);
}

double weak_statistic(const MixtureDensity& f, const MixtureDensity& f0,
                      const SmootherConfig& config) {
    if (f.dimension() != f0.dimension())
        throw input_error("weak_statistic: density dimensions differ");
    config.validate();
    auto diffs = grid_map(config.grid, true, [&](const std::vector<double>& x) {
        return std::abs(smooth_at(f, config, x) - smooth_at(f0, config, x));
    });
    return std::pow(kPi / config.R, static_cast<double>(f.dimension())) * max_of(diffs);
}

}  // namespace sincdens
