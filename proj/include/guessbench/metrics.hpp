#pragma once

#include <span>

#include "guessbench/agent_config.hpp"

namespace guessbench::stats {

// |mean(true) - mean(pred)|. Throws DomainError on empty input.
double ame(std::span<const double> true_ks, std::span<const double> pred_ks);

// Signed difference of per-cohort AMEs, student minus expert.
double delta_subpop(std::span<const double> student_true,
                    std::span<const double> student_pred,
                    std::span<const double> expert_true,
                    std::span<const double> expert_pred);

double zero_rate(std::span<const int> sample);

// agent {EWA 0, S 1, R 2} + context {0, 1, 2} + MoA {0, 1} + model ordinal.
int sophistication_score(const AgentConfig& config);

}  // namespace guessbench::stats
