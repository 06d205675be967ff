#include "finreward/reward_math.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "finreward/errors.hpp"

namespace finreward {
namespace rmath {

std::pair<double, int> importance_from_rollouts(const std::vector<int>& outcomes) {
    if (outcomes.empty()) throw DomainError("importance_from_rollouts: N must be >= 1");
    int correct = 0;
    for (int o : outcomes) {
        if (o != 0 && o != 1) throw DomainError("importance_from_rollouts: outcomes must be 0/1");
        correct += o;
    }
    double soft = static_cast<double>(correct) / static_cast<double>(outcomes.size());
    return {soft, soft > 0.0 ? 1 : 0};
}

double accuracy_score(int step_correct, int knowledge_acc, double omega_k) {
    if (omega_k < 0.0) throw DomainError("accuracy_score: omega_k must be >= 0");
    return 0.5 * (step_correct + omega_k * knowledge_acc);
}

double aggregate_step(const StepComponentVector& v, double temperature) {
    if (temperature <= 0.0) throw DomainError("aggregate_step: temperature must be > 0");
    const double vals[3] = {v.imp, v.qual, v.acc};
    double m = std::max({vals[0], vals[1], vals[2]});
    double w[3];
    double z = 0.0;
    for (int k = 0; k < 3; ++k) {
        w[k] = std::exp((vals[k] - m) / temperature);
        z += w[k];
    }
    double out = 0.0;
    for (int k = 0; k < 3; ++k) out += w[k] / z * vals[k];
    return out;
}

int step_label(double aggregated, double threshold) {
    return aggregated >= threshold ? 1 : 0;
}

double coverage_score(int covered_count, int required_count) {
    if (covered_count < 0 || required_count < 0) {
        throw DomainError("coverage_score: counts must be non-negative");
    }
    if (covered_count > required_count) {
        throw DomainError("coverage_score: covered_count exceeds required_count");
    }
    if (required_count == 0) return 1.0;  // vacuously covered
    return static_cast<double>(covered_count) / static_cast<double>(required_count);
}

double trajectory_score(int r_out, double r_cover, double eta) {
    return r_out + eta * r_cover;
}

int trajectory_label(double score, double threshold) {
    return score >= threshold ? 1 : 0;
}

double ranking_score(const std::vector<double>& step_preds, double traj_pred,
                     double zeta) {
    if (step_preds.empty()) throw DomainError("ranking_score: step_preds must be non-empty");
    double mean = std::accumulate(step_preds.begin(), step_preds.end(), 0.0) /
                  static_cast<double>(step_preds.size());
    return mean + zeta * traj_pred;
}

double rl_reward(int r_out, double r_hat, double delta) {
    return (1.0 - delta) * r_out + delta * r_hat;
}

std::vector<double> group_advantages(const GroupRewards& g) {
    const auto& r = g.values;
    size_t n = r.size();
    if (n < 2) throw DomainError("group_advantages: need at least 2 rewards");
    double mean = std::accumulate(r.begin(), r.end(), 0.0) / static_cast<double>(n);
    double var = 0.0;
    for (double v : r) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    double sd = std::sqrt(var);
    std::vector<double> adv(n, 0.0);
    if (sd < 1e-8) return adv;  // degenerate group
    for (size_t i = 0; i < n; ++i) adv[i] = (r[i] - mean) / sd;
    return adv;
}

double grpo_surrogate(double ratio, double advantage, double clip_eps, double kl,
                      double kl_beta) {
    double clipped = std::clamp(ratio, 1.0 - clip_eps, 1.0 + clip_eps);
    return std::min(ratio * advantage, clipped * advantage) - kl_beta * kl;
}

double bce_loss(double logit, int label) {
    double x = logit;
    return std::max(x, 0.0) - x * label + std::log1p(std::exp(-std::fabs(x)));
}

double total_loss(const std::vector<double>& step_logits,
                  const std::vector<int>& step_labels, double traj_logit,
                  int traj_label, double lambda) {
    if (step_logits.size() != step_labels.size()) {
        throw DomainError("total_loss: step logits/labels length mismatch");
    }
    if (step_logits.empty()) throw DomainError("total_loss: need at least one step");
    double step_sum = 0.0;
    for (size_t t = 0; t < step_logits.size(); ++t) {
        step_sum += bce_loss(step_logits[t], step_labels[t]);
    }
    return step_sum / static_cast<double>(step_logits.size()) +
           lambda * bce_loss(traj_logit, traj_label);
}

}  // namespace rmath
}  // namespace finreward
