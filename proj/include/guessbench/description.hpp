#pragma once

#include <string>
#include <string_view>

#include "guessbench/game.hpp"

namespace guessbench {

inline constexpr std::string_view kDescriptionTemplateVersion = "gg-desc-v1";

// Natural-language rendering of a GameSpec, stamped with its template version.
struct GameDescription {
  std::string text;
  GameSpec spec;
  std::string template_version{kDescriptionTemplateVersion};
};

GameDescription describe_game(const GameSpec& spec);

// Inverse of describe_game. Throws TranslationError naming the first template
// fragment that could not be matched.
GameSpec translate(std::string_view text);
inline GameSpec translate(const GameDescription& description) {
  return translate(description.text);
}

// "two-thirds" for 2/3, "one-half" for 1/2, ... and "n/d" otherwise.
std::string fraction_words(const Rational& p);

}  // namespace guessbench
