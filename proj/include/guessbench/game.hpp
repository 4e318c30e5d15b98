#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace guessbench {

using Rational = boost::rational<std::int64_t>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

// The two-player guessing game G = (N, p, A, U). Both players share the
// integer action range [low, high].
struct GameSpec {
  static constexpr int n_players = 2;

  Rational p{2, 3};
  int low = 0;
  int high = 100;

  // Throws DomainError unless low < high and 0 < p < 1.
  static GameSpec make(Rational p, int low, int high);
  void validate() const;

  bool contains(int action) const { return action >= low && action <= high; }
  int size() const { return high - low + 1; }
  int index_of(int action) const { return action - low; }
  int action_at(int index) const { return low + index; }
  double midpoint() const { return 0.5 * (static_cast<double>(low) + high); }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;
};

std::string to_string(const GameSpec& spec);

struct Payoff {
  double first = 0.0;
  double second = 0.0;
};

// Winner is the action closer to p times the mean of both actions; ties split.
// Exact rational arithmetic; throws RangeError for actions outside A.
Payoff utility(int a_i, int a_j, const GameSpec& spec);

struct MatchResult {
  int guess_i = 0;
  int guess_j = 0;
  Rational mu;
  Rational target;
  double utility_i = 0.0;
  double utility_j = 0.0;
};

MatchResult score_match(int a_i, int a_j, const GameSpec& spec);

}  // namespace guessbench
