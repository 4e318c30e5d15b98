#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "guessbench/experiment_config.hpp"
#include "guessbench/human_data.hpp"
#include "guessbench/simulate.hpp"
#include "guessbench/table.hpp"
#include "guessbench/trace.hpp"

namespace guessbench {

using TraceSet = std::map<std::string, std::vector<ReasoningTrace>>;

struct AnalysisOptions {
  AnalysisFlags flags;
  std::uint64_t seed = 0;                 // derangement pairing
  std::optional<RunManifest> manifest;    // expected cells; absent cells become gaps
  double failure_budget = 0.2;
  GameSpec human_game;                    // range of the human data and KDE grid
};

// Every metrics table of the study. Read-only over the traces; cell and
// episode order of the input does not matter.
//
// Tables: human_summary, human_tests, ewa_benchmark, cells, gaps,
// ame_heatmap, wasserstein_pooled(_kde), zero_rates, sophistication_effects,
// wasserstein_cohort(_kde), delta_heatmap, cohort_effects, token_cost,
// pairings, kde_curves.
MetricsBundle analyze(const TraceSet& traces, const HumanCohorts& human,
                      const AnalysisOptions& options);

// Helpers shared with the shifted-range treatment.
std::vector<int> valid_guesses(const std::vector<ReasoningTrace>& traces, int offset = 0);
nlohmann::ordered_json finite_or_null(double x);
// Episode order fixes the floating-point summation order of every metric.
TraceSet sorted_by_index(TraceSet traces);

}  // namespace guessbench
