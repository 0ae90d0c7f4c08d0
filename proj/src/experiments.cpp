#include "sincdens/experiments.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sincdens/prob_metrics.hpp"
#include "sincdens/sinc_smoother.hpp"
#include "sincdens/smoothness_bounds.hpp"

namespace sincdens::experiments {

namespace {

namespace fs = std::filesystem;

void add_density_keys(std::set<std::string>& keys, const std::string& prefix) {
    keys.insert(prefix + ".family");
    keys.insert(prefix + ".weights");
    keys.insert(prefix + ".locations");
    keys.insert(prefix + ".scale");
}

void add_grid_keys(std::set<std::string>& keys) {
    keys.insert("grid.lower");
    keys.insert("grid.upper");
    keys.insert("grid.step");
}

void add_prior_keys(std::set<std::string>& keys) {
    for (const char* k :
         {"prior.k", "prior.dirichlet_concentration", "prior.location_prior_sd",
          "prior.sigma2_log_mean", "prior.sigma2_log_sd", "prior.truncate", "prior.g",
          "prior.C1_tilde", "prior.C2_tilde", "prior.c1_bar", "prior.c2_bar",
          "prior.sigma2_max", "prior.griddy_nodes"}) {
        keys.insert(k);
    }
}

std::string metadata_line(const Config& cfg, const std::string& seed) {
    std::ostringstream out;
    out << "# config_hash=" << std::hex << cfg.hash() << std::dec << " seed=" << seed << "\n";
    return out.str();
}

}  // namespace

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

MixtureDensity density_from_config(const Config& cfg, const std::string& prefix) {
    const Family family = family_from_name(cfg.get(prefix + ".family"));
    auto weights = cfg.get_double_list(prefix + ".weights");
    auto locations = cfg.get_double_list(prefix + ".locations");
    const double scale = cfg.get_double(prefix + ".scale");
    return MixtureDensity::univariate(family, std::move(weights), std::move(locations), scale);
}

GridSpec grid_from_config(const Config& cfg) {
    return GridSpec(cfg.get_double_or("grid.lower", -10.0), cfg.get_double_or("grid.upper", 10.0),
                    cfg.get_double_or("grid.step", 0.005));
}

PriorSpec prior_from_config(const Config& cfg) {
    PriorSpec prior;
    prior.k = static_cast<std::size_t>(cfg.get_int_or("prior.k", 5));
    prior.dirichlet_concentration = cfg.get_double_or("prior.dirichlet_concentration", 1.0);
    prior.location_prior_sd = cfg.get_double_or("prior.location_prior_sd", 3.0);
    prior.sigma2_log_mean = cfg.get_double_or("prior.sigma2_log_mean", -1.0);
    prior.sigma2_log_sd = cfg.get_double_or("prior.sigma2_log_sd", 0.7);
    prior.truncate = cfg.get_bool_or("prior.truncate", true);
    prior.g_choice = cfg.get_or("prior.g", "log1p");
    prior.C1_tilde = cfg.get_double_or("prior.C1_tilde", 0.25);
    prior.C2_tilde = cfg.get_double_or("prior.C2_tilde", 1.0);
    prior.c1_bar = cfg.get_double_or("prior.c1_bar", 0.25);
    prior.c2_bar = cfg.get_double_or("prior.c2_bar", 1.0);
    prior.sigma2_max = cfg.get_double_or("prior.sigma2_max", 25.0);
    prior.griddy_nodes = static_cast<std::size_t>(cfg.get_int_or("prior.griddy_nodes", 256));
    prior.validate();
    return prior;
}

void write_atomic(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot open output file: " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

std::string run_smooth(const Config& cfg, const std::string& out_path) {
    std::set<std::string> keys{"smoother.R", "smoother.tolerance"};
    add_density_keys(keys, "density");
    add_grid_keys(keys);
    cfg.require_known(keys);

    const auto density = density_from_config(cfg, "density");
    SmootherConfig smoother;
    smoother.R = cfg.get_double("smoother.R");
    smoother.quadrature.abs_tol = cfg.get_double_or("smoother.tolerance", 1e-10);
    smoother.grid = grid_from_config(cfg);
    smoother.validate();

    const auto smoothed = smooth_on_grid(density, smoother);
    std::ostringstream out;
    out << metadata_line(cfg, "none");
    out << "x,f,f_R,abs_error\n";
    double max_err = 0.0;
    const auto xs = smoother.grid.points1d();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double fx = density.pdf1(xs[i]);
        const double err = std::abs(smoothed[i] - fx);
        max_err = std::max(max_err, err);
        out << format_value(xs[i]) << ',' << format_value(fx) << ',' << format_value(smoothed[i])
            << ',' << format_value(err) << '\n';
    }
    write_atomic(out_path, out.str());
    return "smooth: R=" + format_value(smoother.R) + " max abs_error=" + format_value(max_err);
}

std::string run_bounds(const Config& cfg, const std::string& out_path) {
    std::set<std::string> keys{"bounds.R_list", "smoother.tolerance"};
    add_density_keys(keys, "density");
    add_grid_keys(keys);
    cfg.require_known(keys);

    const auto density = density_from_config(cfg, "density");
    const auto cls = classify_smoothness(density);
    const auto R_list = cfg.get_double_list("bounds.R_list");

    SmootherConfig smoother;
    smoother.quadrature.abs_tol = cfg.get_double_or("smoother.tolerance", 1e-10);
    smoother.grid = grid_from_config(cfg);

    std::ostringstream out;
    out << metadata_line(cfg, "none");
    out << "family,sigma,R,empirical_sup_error,prop1_bound,normal_mixture_bound,ratio\n";
    for (double R : R_list) {
        smoother.R = R;
        smoother.validate();
        const double emp = sup_error_empirical(density, smoother);
        const double bound = prop1_bound(cls, density.dimension(), R);
        out << family_name(density.family()) << ',' << format_value(density.scale()) << ','
            << format_value(R) << ',' << format_value(emp) << ',' << format_value(bound) << ',';
        if (density.family() == Family::gaussian) {
            out << format_value(normal_mixture_bound(density.scale(), R));
        }
        out << ',' << format_value(bound > 0 ? emp / bound : 0.0) << '\n';
    }
    write_atomic(out_path, out.str());
    return "bounds: " + std::to_string(R_list.size()) + " radii for " +
           family_name(density.family()) + " mixture";
}

std::string run_metrics(const Config& cfg, const std::string& out_path) {
    std::set<std::string> keys;
    add_density_keys(keys, "f");
    add_density_keys(keys, "g");
    add_grid_keys(keys);
    cfg.require_known(keys);

    const auto f = density_from_config(cfg, "f");
    const auto g = density_from_config(cfg, "g");
    const auto grid = grid_from_config(cfg);

    std::ostringstream out;
    out << metadata_line(cfg, "none");
    out << "kind,value,lower,upper\n";
    for (DistanceKind kind :
         {DistanceKind::sup, DistanceKind::l1, DistanceKind::hellinger, DistanceKind::kl}) {
        out << distance_kind_name(kind) << ',' << format_value(density_distance(kind, f, g, grid))
            << ",,\n";
    }
    out << "kolmogorov," << format_value(kolmogorov_distance(f, g, grid)) << ",,\n";
    const auto bracket = prokhorov_bracket(f, g, grid);
    out << "prokhorov_bracket,," << format_value(bracket.first) << ','
        << format_value(bracket.second) << '\n';
    write_atomic(out_path, out.str());
    return "metrics: prokhorov in [" + format_value(bracket.first) + ", " +
           format_value(bracket.second) + "]";
}

std::string run_consistency(const Config& cfg, const std::string& out_path,
                            const std::string& dump_draws_path) {
    std::set<std::string> keys{"run.n_list", "run.epsilon", "run.seed", "mc.chains",
                               "mc.iterations", "mc.burn_in", "smoother.R", "smoother.tolerance"};
    add_density_keys(keys, "f0");
    add_grid_keys(keys);
    add_prior_keys(keys);
    cfg.require_known(keys);

    const auto f0 = density_from_config(cfg, "f0");
    const auto prior = prior_from_config(cfg);
    const auto n_list = cfg.get_count_list("run.n_list");
    const double epsilon = cfg.get_double("run.epsilon");

    McSettings mc;
    mc.seed = cfg.get_seed("run.seed");  // mandatory for stochastic runs
    mc.chains = static_cast<std::size_t>(cfg.get_int_or("mc.chains", 4));
    mc.iterations = static_cast<std::size_t>(cfg.get_int_or("mc.iterations", 3000));
    mc.burn_in = static_cast<std::size_t>(cfg.get_int_or("mc.burn_in", 1000));
    mc.keep_draws = !dump_draws_path.empty();

    SmootherConfig smoother;
    smoother.R = cfg.get_double_or("smoother.R", 4.0);
    smoother.quadrature.abs_tol = cfg.get_double_or("smoother.tolerance", 1e-10);
    smoother.grid = grid_from_config(cfg);
    smoother.validate();

    const auto trace = consistency_trace(f0, n_list, epsilon, prior, smoother, mc);

    std::ostringstream out;
    out << metadata_line(cfg, std::to_string(mc.seed));
    out << "n,epsilon,mass_estimate,mc_se,ess\n";
    for (const auto& e : trace.entries) {
        out << e.n << ',' << format_value(e.epsilon) << ',' << format_value(e.mass_estimate)
            << ',' << format_value(e.mc_se) << ',' << format_value(e.ess) << '\n';
    }
    write_atomic(out_path, out.str());

    if (!dump_draws_path.empty()) {
        // one JSON record per posterior draw, pooled per n in chain order
        std::ostringstream draws_out;
        const std::size_t kept = mc.iterations - mc.burn_in;
        for (std::size_t ni = 0; ni < trace.draws.size(); ++ni) {
            const auto& pooled = trace.draws[ni];
            for (std::size_t t = 0; t < pooled.size(); ++t) {
                nlohmann::json j;
                j["n"] = trace.entries[ni].n;
                j["chain"] = kept > 0 ? t / kept : 0;
                j["weights"] = pooled[t].weights;
                j["locations"] = pooled[t].locations;
                j["sigma2"] = pooled[t].sigma2;
                draws_out << j.dump() << '\n';
            }
        }
        write_atomic(dump_draws_path, draws_out.str());
    }

    std::ostringstream summary;
    summary << "consistency: mass ";
    for (const auto& e : trace.entries) summary << format_value(e.mass_estimate) << ' ';
    return summary.str();
}

std::string run_priorcheck(const Config& cfg, const std::string& out_path) {
    std::set<std::string> keys{"check.n", "check.R_grid", "check.regime", "check.order",
                               "check.dimension"};
    add_prior_keys(keys);
    cfg.require_known(keys);

    const auto prior = prior_from_config(cfg);
    const auto n = static_cast<std::size_t>(cfg.get_int("check.n"));
    const auto R_grid = cfg.get_double_list("check.R_grid");
    const std::string regime_name = cfg.get_or("check.regime", "supersmooth");
    SmoothRegime regime;
    if (regime_name == "supersmooth") {
        regime = SmoothRegime::supersmooth;
    } else if (regime_name == "ordinary") {
        regime = SmoothRegime::ordinary;
    } else {
        throw config_error("check.regime must be 'supersmooth' or 'ordinary', got '" +
                           regime_name + "'");
    }
    const double order = cfg.get_double_or("check.order", 2.0);
    const auto d = static_cast<std::size_t>(cfg.get_int_or("check.dimension", 1));

    const auto report = prior_tail_check(prior, n, R_grid, regime, order, d);

    std::ostringstream out;
    out << metadata_line(cfg, "none");
    out << "R,sigma2_threshold,tail_probability,bound,pass\n";
    for (const auto& e : report.entries) {
        out << format_value(e.R) << ',' << format_value(e.sigma2_threshold) << ','
            << format_value(e.tail_probability) << ',' << format_value(e.bound) << ','
            << (e.pass ? "true" : "false") << '\n';
    }
    write_atomic(out_path, out.str());
    return std::string("priorcheck: ") + (report.all_pass ? "all pass" : "FAIL at some R");
}

}  // namespace sincdens::experiments
