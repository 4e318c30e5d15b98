#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "guessbench/experiment_config.hpp"
#include "guessbench/trace.hpp"

namespace guessbench {

struct CellManifest {
  AgentConfig config;
  std::string trace_file;  // relative to the run directory
  int episodes = 0;
  int valid = 0;
  int transport_failures = 0;
  int parse_failures = 0;
  int llm_calls = 0;
  bool over_failure_budget = false;
};

struct RunManifest {
  std::string name;
  std::string config_hash;
  std::uint64_t seed = 0;
  int samples_per_cell = 0;
  GameSpec game;
  std::string description_version;
  std::string prompt_version;
  std::map<std::string, std::string> backends;  // model id -> backend identity
  std::string started_at;
  std::string finished_at;
  bool resumed = false;
  double failure_budget = 0.2;
  AnalysisFlags analysis;
  std::vector<CellManifest> cells;

  nlohmann::ordered_json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
  static RunManifest load(const std::filesystem::path& path);
};

struct SimulateOptions {
  bool resume = false;
  std::function<void(const std::string&)> log;  // progress lines; may be empty
};

// Episode roles: cells with a context alternate student (even index) and
// expert (odd index) unless the config fixes role_counts; role_index counts
// within the role.
EpisodeContext make_episode(const ExperimentConfig& config, const AgentConfig& cell, int index);

// Runs every configured cell and writes traces/<cell>.jsonl plus
// manifest.json (written last). With resume, existing complete records are
// kept and only missing episodes are generated.
RunManifest simulate(const ExperimentConfig& config, const SimulateOptions& options = {});

std::string utc_timestamp();

}  // namespace guessbench
