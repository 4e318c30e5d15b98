#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace guessbench {

enum class AgentKind { ewa, simple, reasoner };
enum class ContextKind { none, simple_profile, biography };
enum class Role { unspecified, student, expert };

std::string_view to_string(AgentKind kind);
std::string_view to_string(ContextKind kind);
std::string_view to_string(Role role);
AgentKind parse_agent_kind(std::string_view text);
ContextKind parse_context_kind(std::string_view text);
Role parse_role(std::string_view text);

// Ordinal encodings used for the sophistication score and the regressions.
inline int ordinal(AgentKind k) { return static_cast<int>(k); }
inline int ordinal(ContextKind c) { return static_cast<int>(c); }

struct ModelSpec {
  std::string id;
  int ordinal = 0;
};

// One point of the configuration lattice: agent kind x model x context x
// instruction. The per-episode role is assigned by the runner.
struct AgentConfig {
  std::string id;
  AgentKind kind = AgentKind::ewa;
  std::string model;  // empty for EWA
  std::optional<int> model_ordinal;
  ContextKind context = ContextKind::none;
  bool moa = false;

  // Throws ConfigError when EWA carries context/MoA or an LLM agent has no model.
  void validate() const;
  bool uses_roles() const { return context != ContextKind::none; }
  int llm_calls() const {
    return kind == AgentKind::ewa ? 0 : (kind == AgentKind::simple ? 1 : 2);
  }

  friend bool operator==(const AgentConfig&, const AgentConfig&) = default;
};

// Canonical id such as "R_haiku_cbio_m1"; "ewa" for the benchmark.
std::string make_config_id(AgentKind kind, const std::string& model,
                           ContextKind context, bool moa);

// Column label of the context x instruction axis, e.g. "c0,m0", "csim,m1".
std::string cm_label(ContextKind context, bool moa);
// Position 0..5 along c0m0 < c0m1 < csim m0 < csim m1 < cbio m0 < cbio m1.
inline int cm_index(ContextKind context, bool moa) {
  return 2 * ordinal(context) + (moa ? 1 : 0);
}

// EWA plus {simple, reasoner} x models x {none, sim, bio} x {m0, m1}.
std::vector<AgentConfig> full_lattice(const std::vector<ModelSpec>& models);

}  // namespace guessbench
