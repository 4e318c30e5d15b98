#pragma once

#include <optional>
#include <span>
#include <vector>

namespace guessbench::stats {

struct DensityCurve {
  std::vector<double> x;
  std::vector<double> density;
  double bandwidth = 0.0;
};

// Silverman's rule: 0.9 min(sd, IQR / 1.34) n^(-1/5), falling back to sd
// (or 1) when the spread measure is zero.
double silverman_bandwidth(std::span<const double> sample);

// Gaussian KDE evaluated on `points` equally spaced values in [lo, hi].
// Throws DomainError for fewer than two observations.
DensityCurve kde(std::span<const double> sample, double lo, double hi, int points,
                 std::optional<double> bandwidth = std::nullopt);

}  // namespace guessbench::stats
