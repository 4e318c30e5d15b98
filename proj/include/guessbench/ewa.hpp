#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "guessbench/game.hpp"

// Self-tuning Experience Weighted Attraction (EWA) benchmark agent.
//
// Attractions start at the expected payoff against a truncated Poisson
// cognitive-hierarchy population and are updated by
//
//   A_j(t) = (phi N(t-1) A_j(t-1) + [d + (1-d) I(j, s_i(t))] pi(j, s_-i(t)))
//            / (N(t-1) phi (1-kappa))
//
// with phi = 1 - S/2 driven by the surprise index S. Choice is logit with
// sensitivity lambda.
namespace guessbench::ewa {

using Rng = std::mt19937_64;

enum class LevelZero { uniform, point_mass };

struct EwaParams {
  double lambda = 2.39;
  double tau = 1.5;
  double kappa = 0.0;
  double n0 = 1.0;
  int k_max = 10;
  LevelZero level0 = LevelZero::uniform;
  // Divide by N(t-1) phi (1-kappa) + 1 instead of the printed divisor.
  bool denominator_plus_one = false;

  void validate() const;
  friend bool operator==(const EwaParams&, const EwaParams&) = default;
};

struct CognitiveHierarchy {
  std::vector<double> raw_weights;  // e^-tau tau^k / k!
  std::vector<double> weights;      // renormalised over k = 0..k_max
  std::vector<int> level_guesses;   // floor(a0 p^k) clamped to A
  double anchor = 0.0;              // a0, midpoint of A
};

CognitiveHierarchy poisson_ch_levels(const GameSpec& spec, const EwaParams& params);

struct AttractionState {
  std::vector<double> attractions;    // one per strategy in A
  double n = 1.0;                     // experience weight N(t)
  int t = 0;
  std::vector<int> opponent_history;  // strategy indices s_-i(1..t)
  double phi = 1.0;
};

// Expected payoff of strategy index j against a uniform-random opponent.
double uniform_opponent_payoff(int j, const GameSpec& spec);

AttractionState init_attractions(const GameSpec& spec, const EwaParams& params);

struct SurpriseComponents {
  std::vector<double> h;  // cumulative opponent-strategy frequencies
  std::vector<double> r;  // indicator of the latest opponent strategy
  double s = 0.0;         // sum_k (h_k - r_k)^2, in [0, 2]
};

// Throws DomainError on an empty history.
SurpriseComponents surprise(std::span<const int> history, int strategy_count);

double phi(double s);
double update_experience_weight(double n_prev, double phi, const EwaParams& params);

// Strategies are actions in A; own_play/opp_play are what was realised.
double reinforcement(int j, int own_play, int opp_play, const GameSpec& spec);

// One round of the recursion. Throws DomainError if the divisor is zero.
AttractionState update_attractions(const AttractionState& state, int own_play,
                                   int opp_play, const GameSpec& spec,
                                   const EwaParams& params);

// Logit choice probabilities, stabilised by subtracting the maximum.
std::vector<double> choice_probabilities(std::span<const double> attractions,
                                         double lambda);

// Uniform double in [0, 1) from the top 53 bits.
double uniform01(Rng& rng);
int sample_index(std::span<const double> probabilities, Rng& rng);

// Returns an action of A.
int choose(const AttractionState& state, const GameSpec& spec,
           const EwaParams& params, Rng& rng);

// One-shot interface: sample once from the t = 0 choice distribution.
int i_ewa(const GameSpec& spec, const EwaParams& params, Rng& rng);

struct SelfPlayResult {
  AttractionState player_a;
  AttractionState player_b;
  std::vector<int> plays_a;
  std::vector<int> plays_b;
  std::vector<double> final_probabilities_a;
};

// Two EWA players repeatedly playing each other for `rounds` rounds.
SelfPlayResult iterated_play(const GameSpec& spec, const EwaParams& params,
                             int rounds, Rng& rng);

// CSV with header "action,attraction,probability".
void write_attractions_csv(std::ostream& os, const AttractionState& state,
                           const GameSpec& spec, const EwaParams& params);

}  // namespace guessbench::ewa
