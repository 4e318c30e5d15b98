#pragma once

#include <optional>
#include <string_view>

#include "guessbench/game.hpp"
#include "guessbench/trace.hpp"

namespace guessbench {

struct ParsedGuess {
  std::optional<long long> extracted;  // number found, before the range check
  std::optional<int> guess;            // set only when valid
  GuessFailure failure = GuessFailure::none;

  bool valid() const { return failure == GuessFailure::none; }
};

// Extraction order: the last "FINAL ANSWER: <int>" line, else the last
// standalone integer. Never throws.
ParsedGuess parse_guess(std::string_view text, const GameSpec& spec);

}  // namespace guessbench
