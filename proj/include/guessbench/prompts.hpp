#pragma once

#include <array>
#include <string>
#include <string_view>

#include "guessbench/agent_config.hpp"
#include "guessbench/description.hpp"

namespace guessbench {

inline constexpr std::string_view kPromptTemplateVersion = "gg-prompt-v1";
inline constexpr std::string_view kAnswerMarker = "FINAL ANSWER:";

inline constexpr std::array<std::string_view, 3> kMoaQuestions{
    "What kind of situation is this?",
    "What kind of person am I?",
    "What should a person like me do in a situation like this?",
};

struct AgentContext {
  ContextKind kind = ContextKind::none;
  Role role = Role::unspecified;
  std::string text;

  // Throws ConfigError when kind and role disagree.
  static AgentContext make(ContextKind kind, Role role);
};

struct InstructionModel {
  bool moa = false;
  std::string text;

  static InstructionModel make(bool moa);
};

struct PromptBundle {
  std::string text;
  std::string template_version{kPromptTemplateVersion};
};

// Single-call prompt: context, game description, instruction.
PromptBundle compose_prompt(const GameDescription& description,
                            const AgentContext& context,
                            const InstructionModel& instruction);

// Reasoner stage one: elicit a belief about the opponent's guess.
PromptBundle compose_belief_prompt(const GameDescription& description,
                                   const AgentContext& context,
                                   const InstructionModel& instruction);

// Reasoner stage two: decide given the stated belief.
PromptBundle compose_decision_prompt(const GameDescription& description,
                                     const AgentContext& context,
                                     const InstructionModel& instruction,
                                     std::string_view belief);

}  // namespace guessbench
