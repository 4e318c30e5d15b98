#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "guessbench/agent_config.hpp"
#include "guessbench/game.hpp"

namespace guessbench {

inline constexpr int kTraceSchemaVersion = 1;

enum class GuessFailure { none, no_number, out_of_range, ambiguous, transport };

std::string_view to_string(GuessFailure failure);
GuessFailure parse_guess_failure(std::string_view text);

// Identifies one independent decision within a cell.
struct EpisodeContext {
  std::string cell;
  int index = 0;
  Role role = Role::unspecified;
  int role_index = 0;  // position among episodes of the same role in the cell
  std::uint64_t seed = 0;

  std::string episode_id() const { return cell + "/" + std::to_string(index); }
};

// Everything one episode produced: requests, raw responses, parsed guess.
struct ReasoningTrace {
  std::string episode_id;
  std::string cell;
  int index = 0;
  AgentConfig config;
  Role role = Role::unspecified;
  GameSpec game;
  std::string description_version;
  std::string template_version;
  std::uint64_t seed = 0;
  std::vector<std::string> prompts;
  std::vector<std::string> responses;
  std::vector<std::string> transcripts;  // verbatim wire bodies, HTTP only
  std::optional<std::string> belief;
  std::optional<int> guess;
  bool valid = false;
  GuessFailure failure = GuessFailure::none;
  std::string failure_detail;
  long tokens_in = 0;
  long tokens_out = 0;
  bool tokens_approximate = false;
  int llm_calls = 0;
  int retries = 0;
  nlohmann::ordered_json generation = nlohmann::ordered_json::object();
  std::string backend;
};

nlohmann::ordered_json to_json(const AgentConfig& config);
AgentConfig agent_config_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const GameSpec& spec);
GameSpec game_spec_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const ReasoningTrace& trace);
ReasoningTrace trace_from_json(const nlohmann::json& j);

}  // namespace guessbench
