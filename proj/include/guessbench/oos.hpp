#pragma once

#include <filesystem>
#include <functional>
#include <string>

#include "guessbench/analysis.hpp"
#include "guessbench/experiment_config.hpp"
#include "guessbench/simulate.hpp"
#include "guessbench/table.hpp"

namespace guessbench {

// Shifted-range comparison. Valid shifted guesses are normalised by the
// difference of the lower bounds (150 in [100, 200] becomes 50) and compared
// with the baseline cell of the same id.
//
// Tables: validity (valid-guess ratio per cell), oos_detail (long form with
// W, t and the selected test) and oos_shift (config rows x agent/model W and t).
MetricsBundle compare_oos(const TraceSet& shifted, const TraceSet& baseline,
                          const AnalysisFlags& flags);

struct OosOptions {
  bool resume = true;
  std::function<void(const std::string&)> log;
};

struct OosResult {
  RunManifest manifest;
  MetricsBundle metrics;
};

// Runs (or reuses) the shifted-range simulation, then compares it with the
// baseline run. Throws ConfigError when the baseline traces are missing.
OosResult validate_oos(const ExperimentConfig& shifted, const std::filesystem::path& baseline_dir,
                       const OosOptions& options = {});

}  // namespace guessbench
