#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include <json.hpp>

#include "guessbench/agent_config.hpp"
#include "guessbench/ewa.hpp"
#include "guessbench/game.hpp"
#include "guessbench/hypothesis.hpp"
#include "guessbench/klevel.hpp"
#include "guessbench/llm_backend.hpp"

namespace guessbench {

enum class WassersteinVariant { raw, kde };

struct AnalysisFlags {
  WassersteinVariant wasserstein = WassersteinVariant::raw;
  stats::LeveneCenter levene = stats::LeveneCenter::mean;
  stats::ZeroK zero_k = stats::ZeroK::cap;
  int kde_points = 201;
  int ewa_self_play_rounds = 100;

  nlohmann::ordered_json to_json() const;
  static AnalysisFlags from_json(const nlohmann::json& j);
};

struct ModelEntry {
  ModelSpec model;
  nlohmann::json backend;  // resolved: stub scripts inlined, replay lists loaded
};

struct ExperimentConfig {
  std::string name;
  std::uint64_t seed = 0;
  int samples_per_cell = 100;
  // Role split for cells with a context. Empty: roles alternate by episode
  // index. Otherwise the first `student` episodes are students and the rest
  // experts; the two counts must sum to samples_per_cell.
  std::optional<std::pair<int, int>> role_counts;
  GameSpec game;
  std::vector<ModelEntry> models;
  std::vector<AgentConfig> configs;
  GenerationSettings generation;
  RetryPolicy retry;
  ewa::EwaParams ewa;
  std::filesystem::path output_dir;
  int parallelism = 1;
  double failure_budget = 0.2;
  AnalysisFlags analysis;

  // Canonical JSON of the resolved config; its hash identifies the run.
  nlohmann::ordered_json to_json() const;
  std::string hash() const;

  // Relative paths (stub script files, replay CSVs, output_dir) resolve
  // against base_dir. Throws ConfigError.
  static ExperimentConfig from_json(const nlohmann::json& j,
                                    const std::filesystem::path& base_dir);
  static ExperimentConfig load(const std::filesystem::path& path);
};

}  // namespace guessbench
