#pragma once

#include <span>

namespace guessbench::stats {

// Exact 1-D earth mover's distance between two empirical distributions:
// the integral of |F_a(x) - F_b(x)| over x. Throws DomainError if either
// sample is empty.
double wasserstein_1d(std::span<const double> a, std::span<const double> b);

// Same distance between two densities tabulated on a shared uniform grid.
double wasserstein_grid(std::span<const double> grid,
                        std::span<const double> density_a,
                        std::span<const double> density_b);

}  // namespace guessbench::stats
