#pragma once

#include <string>

#include "experiment_config.hpp"

namespace murmur::cli {

/// Executes one experiment; always writes <out>/manifest.json, also on
/// failure. Returns the process exit code (0 ok, 2 config, 3 numeric, 4 io).
int run_experiment(const std::string& experiment, Config config, const std::string& out_dir);

}  // namespace murmur::cli
