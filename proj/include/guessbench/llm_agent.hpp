#pragma once

#include <memory>

#include "guessbench/llm_backend.hpp"
#include "guessbench/prompts.hpp"
#include "guessbench/umpire.hpp"

namespace guessbench {

struct LlmAgentOptions {
  GenerationSettings generation;
  RetryPolicy retry;
  std::function<void(std::chrono::milliseconds)> sleep;  // empty: real sleep
};

// One backend call: context + description + instruction -> guess.
ReasoningTrace simple_decide(LlmBackend& backend, const AgentConfig& config,
                             const GameDescription& description,
                             const EpisodeContext& episode,
                             const LlmAgentOptions& options = {});

// Two backend calls: belief about the opponent, then a decision given it.
ReasoningTrace reasoner_decide(LlmBackend& backend, const AgentConfig& config,
                               const GameDescription& description,
                               const EpisodeContext& episode,
                               const LlmAgentOptions& options = {});

class LlmAgent : public Agent {
 public:
  LlmAgent(std::shared_ptr<LlmBackend> backend, AgentConfig config,
           LlmAgentOptions options = {})
      : backend_(std::move(backend)), config_(std::move(config)),
        options_(std::move(options)) {}

  ReasoningTrace decide(const GameDescription& description,
                        const EpisodeContext& episode) override;

 private:
  std::shared_ptr<LlmBackend> backend_;
  AgentConfig config_;
  LlmAgentOptions options_;
};

}  // namespace guessbench
