#pragma once

#include <optional>
#include <span>
#include <vector>

namespace guessbench::stats {

double mean(std::span<const double> x);
// Sample variance (n - 1 denominator); requires n >= 2.
double variance(std::span<const double> x);
double stddev(std::span<const double> x);

// Adjusted Fisher-Pearson skewness G1; empty for n < 3 or zero variance.
std::optional<double> skewness(std::span<const double> x);

// Linear-interpolated quantile (type 7), q in [0, 1].
double quantile(std::vector<double> x, double q);

std::vector<double> to_doubles(std::span<const int> x);

// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> average_ranks(std::span<const double> x);

}  // namespace guessbench::stats
