#include "sincdens/posterior_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sincdens/rng.hpp"

namespace sincdens {

namespace {

constexpr double kE = std::numbers::e;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double exp_half_over(double z) { return std::exp(-0.5 * z) / z; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(seed) ^ splitmix64(a * 0x9e3779b97f4a7c15ULL + b));
}

std::vector<double> dirichlet_draw(std::size_t k, const std::vector<double>& alpha,
                                   std::mt19937_64& rng) {
    std::vector<double> w(k);
    double total = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        std::gamma_distribution<double> g(alpha[j], 1.0);
        w[j] = g(rng);
        total += w[j];
    }
    if (total <= 0) {
        // all gammas underflowed; fall back to uniform weights
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(k));
        return w;
    }
    for (auto& wj : w) wj /= total;
    return w;
}

double truncated_sigma2_draw(const PriorSpec& prior, double lower, std::mt19937_64& rng) {
    std::lognormal_distribution<double> base(prior.sigma2_log_mean, prior.sigma2_log_sd);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const double v = base(rng);
        if (v >= lower && v <= prior.sigma2_max) return v;
    }
    throw numerical_error("sigma^2 prior rejection sampler exhausted");
}

// KL(f0 || f) by trapezoid over a 1-D grid; serial so callers can parallelize
// over draws.
double kl_on_grid(const MixtureDensity& f0, const MixtureDensity& f, const GridSpec& grid) {
    const auto& ax = grid.axes.at(0);
    const std::size_t m = ax.size();
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = ax.point(i);
        const double p = f0.pdf1(x);
        if (p <= 0) continue;
        const double q = f.pdf1(x);
        if (q < 1e-300) return std::numeric_limits<double>::infinity();
        const double w = ax.step * ((i == 0 || i + 1 == m) ? 0.5 : 1.0);
        total += w * p * std::log(p / q);
    }
    return total;
}

// Effective sample size via the initial-positive-sequence estimator.
double ess_of(const std::vector<double>& series) {
    const std::size_t n = series.size();
    if (n < 4) return static_cast<double>(n);
    double mean = 0.0;
    for (double x : series) mean += x;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double x : series) var += (x - mean) * (x - mean);
    var /= static_cast<double>(n);
    if (var <= 0) return static_cast<double>(n);
    double rho_sum = 0.0;
    for (std::size_t lag = 1; lag < n / 2; ++lag) {
        double acov = 0.0;
        for (std::size_t t = 0; t + lag < n; ++t)
            acov += (series[t] - mean) * (series[t + lag] - mean);
        acov /= static_cast<double>(n);
        const double rho = acov / var;
        if (rho <= 0.0) break;
        rho_sum += rho;
    }
    return static_cast<double>(n) / (1.0 + 2.0 * rho_sum);
}

struct GibbsState {
    std::vector<double> weights;
    std::vector<double> locations;
    double sigma2;
    std::vector<std::size_t> alloc;
};

}  // namespace

void PriorSpec::validate() const {
    if (k < 1) throw input_error("prior: k must be >= 1");
    if (!(dirichlet_concentration > 0)) throw input_error("prior: concentration must be > 0");
    if (!(location_prior_sd > 0)) throw input_error("prior: location sd must be > 0");
    if (!(sigma2_log_sd > 0)) throw input_error("prior: sigma2 log-sd must be > 0");
    if (!(sigma2_max > 0)) throw input_error("prior: sigma2_max must be > 0");
    if (griddy_nodes < 8) throw input_error("prior: at least 8 griddy nodes required");
    if (g_choice != "log1p" && g_choice != "sqrt" && g_choice != "linear")
        throw input_error("prior: unknown g choice '" + g_choice + "'");
    if (!(C1_tilde > 0) || !(C2_tilde > 0) || !(c1_bar > 0) || !(c2_bar > 0))
        throw input_error("prior: tail constants must be > 0");
}

double PriorSpec::a_n(std::size_t n) const {
    if (!truncate) return 0.0;
    return 1.0 / std::log(static_cast<double>(n) + kE);
}

double PriorSpec::g(double R) const {
    if (g_choice == "sqrt") return std::sqrt(R);
    if (g_choice == "linear") return R;
    return std::log1p(R);
}

double PriorSpec::sigma2_cdf(double t, std::size_t n) const {
    if (t <= 0) return 0.0;
    auto base = [&](double v) {
        return normal_cdf((std::log(v) - sigma2_log_mean) / sigma2_log_sd);
    };
    const double a = a_n(n);
    if (!truncate) return base(t);
    if (t <= a) return 0.0;
    const double fa = base(a);
    return (base(t) - fa) / (1.0 - fa);
}

double tau_inverse(double v) {
    if (!(v > 0) || !std::isfinite(v)) throw input_error("tau_inverse: v must be > 0");
    double lo = 1.0, hi = 1.0;
    while (exp_half_over(lo) <= v) lo *= 0.5;
    while (exp_half_over(hi) >= v) hi *= 2.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-16 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (exp_half_over(mid) > v ? lo : hi) = mid;
    }
    double z = 0.5 * (lo + hi);
    // Newton polish
    for (int it = 0; it < 4; ++it) {
        const double h = exp_half_over(z);
        const double dh = -h * (0.5 + 1.0 / z);
        z -= (h - v) / dh;
    }
    return z;
}

PriorTailReport prior_tail_check(const PriorSpec& prior, std::size_t n,
                                 const std::vector<double>& R_grid, SmoothRegime regime,
                                 double order, std::size_t d) {
    prior.validate();
    if (R_grid.empty()) throw input_error("prior_tail_check: empty R grid");
    if (regime == SmoothRegime::ordinary && !(order > 1.0))
        throw input_error("prior_tail_check: ordinary regime requires beta > 1");
    if (!(order > 0)) throw input_error("prior_tail_check: order must be > 0");
    PriorTailReport report;
    report.all_pass = true;
    for (double R : R_grid) {
        if (!(R > 0)) throw input_error("prior_tail_check: R must be > 0");
        PriorTailEntry entry;
        entry.R = R;
        if (regime == SmoothRegime::supersmooth) {
            entry.sigma2_threshold = prior.C1_tilde / std::pow(R, order / 2.0);
            entry.bound = std::exp(-prior.C2_tilde * static_cast<double>(n) * prior.g(R));
        } else {
            const double p = 2.0 + 2.0 * (static_cast<double>(d) - 1.0) / order;
            const double t = prior.c1_bar / std::pow(R, (order - 1.0) / 2.0);
            entry.sigma2_threshold = std::pow(t, 2.0 / p);
            entry.bound = std::exp(-prior.c2_bar * static_cast<double>(n) * prior.g(R));
        }
        entry.tail_probability = prior.sigma2_cdf(entry.sigma2_threshold, n);
        entry.pass = entry.tail_probability <= entry.bound;
        report.all_pass = report.all_pass && entry.pass;
        report.entries.push_back(entry);
    }
    return report;
}

PosteriorDraw prior_draw(const PriorSpec& prior, std::size_t n, std::mt19937_64& rng) {
    PosteriorDraw draw;
    const std::vector<double> alpha(prior.k, prior.dirichlet_concentration);
    draw.weights = dirichlet_draw(prior.k, alpha, rng);
    draw.locations.resize(prior.k);
    std::normal_distribution<double> loc(0.0, prior.location_prior_sd);
    for (auto& mu : draw.locations) mu = loc(rng);
    const double lower = prior.truncate ? prior.a_n(n) : 0.0;
    draw.sigma2 = truncated_sigma2_draw(prior, lower, rng);
    return draw;
}

MixtureDensity draw_density(const PosteriorDraw& draw) {
    return MixtureDensity::univariate(Family::gaussian, draw.weights, draw.locations,
                                      std::sqrt(draw.sigma2));
}

KlMassEstimate prior_kl_mass(const PriorSpec& prior, std::size_t n, const MixtureDensity& f0,
                             double epsilon, std::size_t draws, std::uint64_t seed,
                             const GridSpec& grid) {
    prior.validate();
    if (draws < 100) throw input_error("prior_kl_mass: at least 100 draws required");
    if (!(epsilon > 0)) throw input_error("prior_kl_mass: epsilon must be > 0");
    if (f0.dimension() != 1) throw unsupported_error("prior_kl_mass: d = 1 only");
    std::vector<char> hit(draws, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(draws); ++i) {
        auto rng = make_stream(seed, static_cast<std::uint64_t>(i));
        const auto draw = prior_draw(prior, n, rng);
        const double kl = kl_on_grid(f0, draw_density(draw), grid);
        hit[static_cast<std::size_t>(i)] = kl < epsilon ? 1 : 0;
    }
    std::size_t hits = 0;
    for (char h : hit) hits += static_cast<std::size_t>(h);
    const double p = static_cast<double>(hits) / static_cast<double>(draws);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(draws));
    return {p, se, hits};
}

std::vector<PosteriorDraw> run_gibbs(const std::vector<double>& data, const PriorSpec& prior,
                                     std::size_t iterations, std::size_t burn_in,
                                     std::uint64_t seed) {
    prior.validate();
    if (burn_in > iterations) throw input_error("run_gibbs: burn_in exceeds iterations");
    for (double x : data) {
        if (!std::isfinite(x)) throw input_error("run_gibbs: non-finite data");
    }
    const std::size_t n = data.size();
    const std::size_t k = prior.k;
    auto rng = make_stream(seed);

    std::vector<PosteriorDraw> out;
    out.reserve(iterations - burn_in);

    if (n == 0) {
        // no likelihood: the posterior is the prior
        for (std::size_t it = 0; it < iterations; ++it) {
            const auto draw = prior_draw(prior, n, rng);
            if (it >= burn_in) out.push_back(draw);
        }
        return out;
    }

    const double grid_lo = prior.truncate ? prior.a_n(n) : 1e-4;
    const double grid_hi = prior.sigma2_max;
    const std::size_t M = prior.griddy_nodes;
    std::vector<double> nodes(M);
    const double log_lo = std::log(grid_lo), log_hi = std::log(grid_hi);
    for (std::size_t m = 0; m < M; ++m) {
        nodes[m] = std::exp(log_lo + (static_cast<double>(m) + 0.5) * (log_hi - log_lo) /
                                         static_cast<double>(M));
    }

    GibbsState state;
    {
        const auto init = prior_draw(prior, n, rng);
        state.weights = init.weights;
        state.locations = init.locations;
        state.sigma2 = std::min(init.sigma2, grid_hi);
        state.alloc.assign(n, 0);
    }

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> logp(k), counts(k), sums(k), logw(M);

    for (std::size_t it = 0; it < iterations; ++it) {
        // allocations
        std::fill(counts.begin(), counts.end(), 0.0);
        std::fill(sums.begin(), sums.end(), 0.0);
        const double inv2v = 1.0 / (2.0 * state.sigma2);
        for (std::size_t i = 0; i < n; ++i) {
            double best = -std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < k; ++j) {
                const double d = data[i] - state.locations[j];
                logp[j] = std::log(std::max(state.weights[j], 1e-300)) - d * d * inv2v;
                best = std::max(best, logp[j]);
            }
            double total = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                logp[j] = std::exp(logp[j] - best);
                total += logp[j];
            }
            const double u = unif(rng) * total;
            double acc = 0.0;
            std::size_t z = k - 1;
            for (std::size_t j = 0; j < k; ++j) {
                acc += logp[j];
                if (u <= acc) {
                    z = j;
                    break;
                }
            }
            state.alloc[i] = z;
            counts[z] += 1.0;
            sums[z] += data[i];
        }

        // weights | allocations
        std::vector<double> alpha(k);
        for (std::size_t j = 0; j < k; ++j) alpha[j] = prior.dirichlet_concentration + counts[j];
        state.weights = dirichlet_draw(k, alpha, rng);

        // locations | rest
        const double prior_prec = 1.0 / (prior.location_prior_sd * prior.location_prior_sd);
        for (std::size_t j = 0; j < k; ++j) {
            const double prec = counts[j] / state.sigma2 + prior_prec;
            const double var = 1.0 / prec;
            const double mean = (sums[j] / state.sigma2) * var;
            std::normal_distribution<double> post(mean, std::sqrt(var));
            state.locations[j] = post(rng);
        }

        // sigma^2 | rest: griddy Gibbs on the log grid
        double sse = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = data[i] - state.locations[state.alloc[i]];
            sse += d * d;
        }
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < M; ++m) {
            const double v = nodes[m];
            const double lv = std::log(v);
            // truncated log-normal prior density x log-grid measure (dv = v dlog v)
            const double log_prior = -0.5 * std::pow((lv - prior.sigma2_log_mean) /
                                                         prior.sigma2_log_sd,
                                                     2.0) -
                                     lv;
            const double log_lik = -0.5 * static_cast<double>(n) * lv - sse / (2.0 * v);
            logw[m] = log_prior + lv + log_lik;
            best = std::max(best, logw[m]);
        }
        double total = 0.0;
        for (std::size_t m = 0; m < M; ++m) {
            logw[m] = std::exp(logw[m] - best);
            total += logw[m];
        }
        const double u = unif(rng) * total;
        double acc = 0.0;
        std::size_t pick = M - 1;
        for (std::size_t m = 0; m < M; ++m) {
            acc += logw[m];
            if (u <= acc) {
                pick = m;
                break;
            }
        }
        state.sigma2 = nodes[pick];

        if (it >= burn_in) {
            out.push_back({state.weights, state.locations, state.sigma2});
        }
    }
    return out;
}

ConsistencyTrace consistency_trace(const MixtureDensity& f0, const std::vector<std::size_t>& n_list,
                                   double epsilon, const PriorSpec& prior,
                                   const SmootherConfig& smoother, const McSettings& mc) {
    prior.validate();
    if (!(epsilon > 0)) throw input_error("consistency_trace: epsilon must be > 0");
    if (n_list.empty()) throw input_error("consistency_trace: empty n list");
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1])
            throw input_error("consistency_trace: n_list must be strictly increasing");
    }
    if (f0.dimension() != 1) throw unsupported_error("consistency_trace: d = 1 only");
    if (mc.chains == 0) throw input_error("consistency_trace: at least one chain");

    const std::size_t kept = mc.iterations - mc.burn_in;
    const std::size_t num_runs = n_list.size() * mc.chains;
    std::vector<std::vector<PosteriorDraw>> runs(num_runs);

    // chains x n entries are independent; each gets a counter-derived stream
#pragma omp parallel for schedule(dynamic)
    for (long long r = 0; r < static_cast<long long>(num_runs); ++r) {
        const std::size_t ni = static_cast<std::size_t>(r) / mc.chains;
        const std::size_t chain = static_cast<std::size_t>(r) % mc.chains;
        const std::size_t n = n_list[ni];
        const auto data = f0.sample1d(n, derive_seed(mc.seed, n, 0));
        runs[static_cast<std::size_t>(r)] =
            run_gibbs(data, prior, mc.iterations, mc.burn_in, derive_seed(mc.seed, n, chain + 1));
    }

    const auto xs = smoother.grid.points1d();
    std::vector<double> f0_vals(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) f0_vals[i] = f0.pdf1(xs[i]);

    ConsistencyTrace trace;
    for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
        // pooled sup distances, ordered by (chain, iteration)
        std::vector<double> dists;
        dists.reserve(mc.chains * kept);
        for (std::size_t chain = 0; chain < mc.chains; ++chain) {
            const auto& draws = runs[ni * mc.chains + chain];
            const std::size_t base = dists.size();
            dists.resize(base + draws.size());
#pragma omp parallel for schedule(dynamic, 8)
            for (long long t = 0; t < static_cast<long long>(draws.size()); ++t) {
                const auto dens = draw_density(draws[static_cast<std::size_t>(t)]);
                double sup = 0.0;
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    sup = std::max(sup, std::abs(dens.pdf1(xs[i]) - f0_vals[i]));
                }
                dists[base + static_cast<std::size_t>(t)] = sup;
            }
        }
        std::size_t exceed = 0;
        for (double d : dists) exceed += d > epsilon ? 1 : 0;
        const double N = static_cast<double>(dists.size());
        const double p = N > 0 ? static_cast<double>(exceed) / N : 0.0;
        double ess = 0.0;
        for (std::size_t chain = 0; chain < mc.chains; ++chain) {
            const auto first = dists.begin() + static_cast<std::ptrdiff_t>(chain * kept);
            ess += ess_of(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(kept)));
        }
        trace.entries.push_back({n_list[ni], epsilon, p,
                                 N > 0 ? std::sqrt(p * (1.0 - p) / N) : 0.0, dists.size(), ess});
        if (mc.keep_draws) {
            std::vector<PosteriorDraw> pooled;
            pooled.reserve(mc.chains * kept);
            for (std::size_t chain = 0; chain < mc.chains; ++chain) {
                const auto& draws = runs[ni * mc.chains + chain];
                pooled.insert(pooled.end(), draws.begin(), draws.end());
            }
            trace.draws.push_back(std::move(pooled));
        }
    }
    return trace;
}

}  // namespace sincdens
