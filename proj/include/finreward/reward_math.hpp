#pragma once

#include <utility>
#include <vector>

namespace finreward {
namespace rmath {

// Raw scores for one step: importance, quality, accuracy, each in [0,1].
struct StepComponentVector {
    double imp = 0.0;
    double qual = 0.0;
    double acc = 0.0;
};

// Rewards of one GRPO response group, length N >= 2.
struct GroupRewards {
    std::vector<double> values;
};

// Fraction of rollout continuations that reach the gold answer, plus the
// hard label (1 iff the soft score is nonzero). Throws DomainError on an
// empty outcome list.
std::pair<double, int> importance_from_rollouts(const std::vector<int>& outcomes);

// 0.5 * (step_correct + omega_k * knowledge_acc).
double accuracy_score(int step_correct, int knowledge_acc, double omega_k);

// Softmax-weighted sum of the three components (temperature 1 by default).
// The weights form a convex combination, so the result stays within
// [min(v), max(v)].
double aggregate_step(const StepComponentVector& v, double temperature = 1.0);

// 1 iff aggregated >= threshold (ties go to 1).
int step_label(double aggregated, double threshold);

// covered/required; 0 of 0 counts as vacuously covered (1.0). Throws
// DomainError when covered > required or either count is negative.
double coverage_score(int covered_count, int required_count);

// r_out + eta * r_cover.
double trajectory_score(int r_out, double r_cover, double eta);

int trajectory_label(double score, double threshold);

// mean(step_preds) + zeta * traj_pred. Throws DomainError on empty steps.
double ranking_score(const std::vector<double>& step_preds, double traj_pred,
                     double zeta);

// (1 - delta) * r_out + delta * r_hat.
double rl_reward(int r_out, double r_hat, double delta);

// Group-normalized advantages: (r_i - mean) / population std. Groups whose
// std falls below 1e-8 get all-zero advantages. Throws DomainError for
// N < 2.
std::vector<double> group_advantages(const GroupRewards& g);

// Per-token GRPO surrogate term:
//   min(ratio*A, clip(ratio, 1-eps, 1+eps)*A) - kl_beta*kl.
double grpo_surrogate(double ratio, double advantage, double clip_eps, double kl,
                      double kl_beta);

// Numerically stable binary cross-entropy from a logit:
//   max(x,0) - x*L + log1p(exp(-|x|)).
double bce_loss(double logit, int label);

// mean over steps of bce_loss + lambda * bce_loss(trajectory). Throws
// DomainError on length mismatch or empty steps.
double total_loss(const std::vector<double>& step_logits,
                  const std::vector<int>& step_labels, double traj_logit,
                  int traj_label, double lambda);

}  // namespace rmath
}  // namespace finreward
