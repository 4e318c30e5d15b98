#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "guessbench/agent_config.hpp"

namespace guessbench {

struct GenerationSettings {
  std::optional<double> temperature;
  std::optional<int> max_tokens;

  nlohmann::ordered_json to_json() const;
  static GenerationSettings from_json(const nlohmann::json& j);
};

enum class CallStage { single, belief, decision };
std::string_view to_string(CallStage stage);

struct CompletionRequest {
  std::string prompt;
  std::string model;
  GenerationSettings settings;
  std::uint64_t seed = 0;
  // Episode metadata available to scripted backends; never sent over HTTP.
  CallStage stage = CallStage::single;
  Role role = Role::unspecified;
  int episode_index = 0;
  int role_index = 0;
};

struct Usage {
  long tokens_in = 0;
  long tokens_out = 0;
};

struct Completion {
  std::string text;
  std::optional<Usage> usage;
  std::string raw_request;   // verbatim wire bodies; empty for the stub
  std::string raw_response;
};

// Throws TransportError for transport-level failures (including rate limits).
class LlmBackend {
 public:
  virtual ~LlmBackend() = default;
  virtual Completion complete(const CompletionRequest& request) = 0;
  virtual std::string identity() const = 0;
};

struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{500};
  double multiplier = 2.0;
};

struct RetryOutcome {
  Completion completion;
  int retries = 0;
};

// Retries transport errors only; the final failure is rethrown.
RetryOutcome complete_with_retry(
    LlmBackend& backend, const CompletionRequest& request, const RetryPolicy& policy,
    const std::function<void(std::chrono::milliseconds)>& sleep = {});

// A scripted, deterministic backend. Rules are tried in order; the first
// whose filters all match produces the response template.
//
// Template placeholders, each yielding an integer:
//   {uniform:LO:HI}        uniform integer in [LO, HI]
//   {normal:MEAN:SD:LO:HI} rounded normal draw clamped to [LO, HI]
//   {choice:a|b|c}         one of the listed integers
//   {replay:COHORT}        the role_index-th value of a replay list
//                          (episode_index for cohort "pooled")
//   {low} {high}           the range parsed from the prompt
// Any placeholder may end in "+low" to add the game's lower bound.
struct StubRule {
  std::vector<std::string> contains;  // all must occur in the prompt
  std::optional<Role> role;
  std::optional<CallStage> stage;
  std::optional<std::string> model;
  std::string response;
  bool fail = false;  // simulate a transport failure
};

struct StubScript {
  std::vector<StubRule> rules;
  std::string fallback = "I am not sure.";
  std::map<std::string, std::vector<int>> replay;

  static StubScript from_json(const nlohmann::json& j);
};

class ScriptedStub : public LlmBackend {
 public:
  explicit ScriptedStub(StubScript script, std::string name = "stub")
      : script_(std::move(script)), name_(std::move(name)) {}

  Completion complete(const CompletionRequest& request) override;
  std::string identity() const override { return "scripted_stub:" + name_; }

  const StubScript& script() const { return script_; }

 private:
  std::string render(const std::string& tmpl, const CompletionRequest& request) const;

  StubScript script_;
  std::string name_;
};

// OpenAI-style chat-completions endpoint. The key is read from the named
// environment variable at call time and sent as a bearer token.
struct HttpChatSettings {
  std::string base_url;  // e.g. "https://api.example.com"
  std::string path = "/v1/chat/completions";
  std::map<std::string, std::string> model_names;  // lattice model id -> remote name
  std::string api_key_env;
  std::chrono::seconds timeout{120};

  static HttpChatSettings from_json(const nlohmann::json& j);
};

class HttpChatBackend : public LlmBackend {
 public:
  explicit HttpChatBackend(HttpChatSettings settings) : settings_(std::move(settings)) {}

  Completion complete(const CompletionRequest& request) override;
  std::string identity() const override { return "http_chat:" + settings_.base_url; }

  // Request body as sent on the wire (no credentials are part of the body).
  std::string request_body(const CompletionRequest& request) const;

 private:
  HttpChatSettings settings_;
};

std::unique_ptr<LlmBackend> make_backend(const nlohmann::json& spec);

}  // namespace guessbench
