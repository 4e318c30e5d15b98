#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace guessbench::stats {

enum class TestKind { levene, t_equal_var, welch, mann_whitney_u, spearman };
std::string_view to_string(TestKind kind);

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
  TestKind kind = TestKind::levene;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::optional<double> df;
  bool degenerate = false;  // statistic undefined; p set by convention
  bool exact = false;       // p from the exact null distribution
};

enum class LeveneCenter { mean, median };

// Two-group Levene test; median centring gives Brown-Forsythe.
TestResult levene(std::span<const double> a, std::span<const double> b,
                  LeveneCenter center = LeveneCenter::mean);

TestResult t_test_equal_var(std::span<const double> a, std::span<const double> b);
TestResult welch_t_test(std::span<const double> a, std::span<const double> b);

enum class MwuMethod { automatic, exact, asymptotic };

// U for sample a. Asymptotic p uses the tie-corrected normal approximation
// with continuity correction; the exact null is used automatically when
// there are no ties and both samples have fewer than 8 observations.
TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                          MwuMethod method = MwuMethod::automatic);

// Exact two-sided p-value of U under H0 (no ties).
double mann_whitney_exact_p(double u, std::size_t n_a, std::size_t n_b);

struct TestSelection {
  double alpha = 0.05;
  double skew_threshold = 2.0;
  LeveneCenter levene_center = LeveneCenter::mean;
};

// |skew| > 2 in either sample -> Mann-Whitney; otherwise Levene at alpha
// picks the equal-variance or Welch t-test.
TestResult choose_test(std::span<const double> a, std::span<const double> b,
                       const TestSelection& selection = {});

// Spearman's rho with average ranks; p from the t approximation (n - 2 df).
TestResult spearman(std::span<const double> x, std::span<const double> y);

// Two-sided p-values from reference distributions.
double student_t_two_sided_p(double t, double df);
double f_upper_p(double f, double df1, double df2);
double normal_two_sided_p(double z);
double chi_square_upper_p(double x, double df);

// "*", "**", "***" for p below 0.05, 0.01, 0.001.
std::string_view significance_stars(double p);

}  // namespace guessbench::stats
