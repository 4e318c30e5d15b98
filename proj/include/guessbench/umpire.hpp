#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "guessbench/description.hpp"
#include "guessbench/trace.hpp"

namespace guessbench {

// An interpretation function: game description (+ the agent's own context
// and instruction) to an integer guess, with everything recorded in a trace.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual ReasoningTrace decide(const GameDescription& description,
                                const EpisodeContext& episode) = 0;
};

struct Match {
  std::optional<MatchResult> result;  // empty when either guess is invalid
  ReasoningTrace trace_a;
  ReasoningTrace trace_b;
  bool complete() const { return result.has_value(); }
};

// splitmix64 finaliser; used to derive independent per-episode streams.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t experiment_seed, std::string_view cell,
                          std::uint64_t index);

// Pairs agents and runs one-shot matches. Deterministic given its seed.
class Umpire {
 public:
  explicit Umpire(std::uint64_t seed) : seed_(seed) {}

  // Both agents decide on the same description without seeing each other.
  Match play_match(Agent& agent_a, Agent& agent_b, const GameSpec& spec,
                   int match_index) const;

  // Random cyclic derangement: partner[i] != i for all i (n >= 2).
  std::vector<int> derangement(int n, std::string_view cell) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

// Scores each guess against its derangement partner; callers pass only the
// valid guesses of a cell.
struct PairedScore {
  int episode = 0;
  int partner = 0;
  int guess = 0;
  int partner_guess = 0;
  double utility = 0.0;
};
std::vector<PairedScore> score_pairs(std::span<const int> guesses,
                                     std::span<const int> partners,
                                     const GameSpec& spec);

}  // namespace guessbench
