#pragma once

#include <string_view>

#include "guessbench/trace.hpp"

namespace guessbench {

// Approximate token count: alphanumeric runs plus punctuation characters.
// Used only when a backend does not report usage.
long approximate_tokens(std::string_view text);

struct TokenCount {
  long tokens_in = 0;
  long tokens_out = 0;
  bool approximate = false;
};

TokenCount count_tokens(const ReasoningTrace& trace);

}  // namespace guessbench
