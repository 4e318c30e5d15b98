#pragma once

#include <string>
#include <vector>

namespace guessbench::stats {

struct Coefficient {
  std::string name;
  double estimate = 0.0;
  double std_error = 0.0;
  double t_stat = 0.0;
  double p_value = 1.0;
};

struct RegressionFit {
  std::vector<Coefficient> coefficients;  // intercept first when requested
  double r_squared = 0.0;
  double sigma2 = 0.0;
  int df_residual = 0;
  std::vector<double> residuals;
};

// Least squares y ~ X (+ intercept). Rows of X are observations. Throws
// RankDeficiencyError naming the first linearly dependent column and
// DomainError when there are not more rows than parameters.
RegressionFit ols(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                  const std::vector<std::string>& names, bool intercept = true);

}  // namespace guessbench::stats
