#pragma once

#include "guessbench/ewa.hpp"
#include "guessbench/umpire.hpp"

namespace guessbench {

// EWA wrapped as an Agent: the umpire translates the description to a
// GameSpec and the agent samples once from its initial choice distribution.
class EwaAgent : public Agent {
 public:
  EwaAgent(AgentConfig config, ewa::EwaParams params)
      : config_(std::move(config)), params_(params) {}

  ReasoningTrace decide(const GameDescription& description,
                        const EpisodeContext& episode) override;

 private:
  AgentConfig config_;
  ewa::EwaParams params_;
};

}  // namespace guessbench
