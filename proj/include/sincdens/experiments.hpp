#pragma once

#include <string>

#include "sincdens/config.hpp"
#include "sincdens/densities.hpp"
#include "sincdens/grid.hpp"
#include "sincdens/posterior_sim.hpp"

namespace sincdens::experiments {

// Config fragment readers (prefix is the dotted section, e.g. "density").
MixtureDensity density_from_config(const Config& cfg, const std::string& prefix);
GridSpec grid_from_config(const Config& cfg);
PriorSpec prior_from_config(const Config& cfg);

// Atomic write: temp file in the target directory, then rename.
void write_atomic(const std::string& path, const std::string& content);

std::string format_value(double v);  // 12 significant digits

// Each runner validates the config schema, executes, writes the CSV artifact
// to out_path, and returns a one-line summary.
std::string run_smooth(const Config& cfg, const std::string& out_path);
std::string run_bounds(const Config& cfg, const std::string& out_path);
std::string run_metrics(const Config& cfg, const std::string& out_path);
std::string run_consistency(const Config& cfg, const std::string& out_path,
                            const std::string& dump_draws_path = "");
std::string run_priorcheck(const Config& cfg, const std::string& out_path);

}  // namespace sincdens::experiments
