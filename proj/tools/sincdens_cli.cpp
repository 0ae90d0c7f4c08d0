#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sincdens/experiments.hpp"

namespace {

// --out, with optional directory override from the environment.
std::string resolve_out(const std::string& out, const std::string& fallback_name) {
    std::string path = out.empty() ? fallback_name : out;
    if (const char* dir = std::getenv("SINCDENS_OUT_DIR"); dir && *dir) {
        std::filesystem::path p(path);
        path = (std::filesystem::path(dir) / p.filename()).string();
    }
    return path;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sinc-kernel density smoothing and posterior consistency experiments"};
    app.require_subcommand(1);

    struct SubArgs {
        std::string config;
        std::string out;
    };

    std::map<std::string, SubArgs> args;
    std::string dump_draws;
    for (const std::string name : {"smooth", "bounds", "metrics", "consistency", "priorcheck"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", args[name].config, "experiment config file")->required();
        sub->add_option("--out", args[name].out, "output CSV path");
        if (name == "consistency") {
            sub->add_option("--dump-draws", dump_draws, "JSON-lines posterior draw log");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const auto& a = args[name];

    try {
        const sincdens::Config cfg = sincdens::Config::parse_file(a.config);
        const std::string out_path = resolve_out(a.out, name + ".csv");
        std::string summary;
        if (name == "smooth") {
            summary = sincdens::experiments::run_smooth(cfg, out_path);
        } else if (name == "bounds") {
            summary = sincdens::experiments::run_bounds(cfg, out_path);
        } else if (name == "metrics") {
            summary = sincdens::experiments::run_metrics(cfg, out_path);
        } else if (name == "consistency") {
            summary = sincdens::experiments::run_consistency(cfg, out_path, dump_draws);
        } else {
            summary = sincdens::experiments::run_priorcheck(cfg, out_path);
        }
        std::cout << summary << " -> " << out_path << "\n";
        return 0;
    } catch (const sincdens::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const sincdens::input_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const sincdens::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
