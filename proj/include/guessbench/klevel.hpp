#pragma once

#include <span>
#include <vector>

namespace guessbench::stats {

// How a guess of 0 (log undefined) enters the k transform.
enum class ZeroK { cap, exclude };

struct KLevelOptions {
  double anchor = 50.0;  // a0
  double p = 2.0 / 3.0;
  ZeroK zero = ZeroK::cap;
};

// k = ln(guess / a0) / ln(p); a guess of 0 maps to the cap k(1).
// Throws DomainError for negative guesses.
double to_k_level(double guess, const KLevelOptions& options = {});

// Transform a sample; with ZeroK::exclude zeros are dropped.
std::vector<double> to_k_levels(std::span<const int> guesses,
                                const KLevelOptions& options = {});

}  // namespace guessbench::stats
