#include "finreward/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "finreward/errors.hpp"

namespace finreward {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

void check_range(const char* name, double v, double lo, double hi,
                 bool lo_open = false, bool hi_open = false) {
    bool ok = std::isfinite(v) && (lo_open ? v > lo : v >= lo) &&
              (hi_open ? v < hi : v <= hi);
    if (!ok) {
        throw ConfigError(std::string(name) + " must be in " +
                          (lo_open ? "(" : "[") + std::to_string(lo) + ", " +
                          std::to_string(hi) + (hi_open ? ")" : "]") + ", got " +
                          std::to_string(v));
    }
}

}  // namespace

void KnowledgeBase::validate() const {
    std::set<std::string> seen;
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        std::string key = lower(trim(e.term));
        if (key.empty()) {
            throw InvariantError("knowledge[" + std::to_string(i) +
                                 "].term: terms must be non-empty");
        }
        if (!seen.insert(key).second) {
            throw InvariantError("knowledge terms must be unique case-insensitively; duplicate '" +
                                 e.term + "'");
        }
        if (trim(e.explanation).empty()) {
            throw InvariantError("knowledge[" + std::to_string(i) +
                                 "].explanation: explanations must be non-empty");
        }
    }
}

void ReasoningSample::validate() const {
    if (trace_steps.empty()) {
        throw InvariantError("trace_steps must be non-empty");
    }
    for (size_t i = 0; i < trace_steps.size(); ++i) {
        if (trim(trace_steps[i]).empty()) {
            throw InvariantError("trace_steps[" + std::to_string(i) +
                                 "] must be non-empty after trimming");
        }
    }
    if (gold_answer && gold_answer->empty()) {
        throw InvariantError("gold_answer must be a non-empty subset of A..Z when present");
    }
    knowledge.validate();
}

void StepAnnotation::validate(double omega_k, double step_threshold) const {
    auto in01 = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    if (step_index < 1) throw InvariantError("step_index must be 1-based");
    if (!in01(r_importance)) throw InvariantError("r_importance must be in [0,1]");
    if (!in01(r_qual)) throw InvariantError("r_qual must be in [0,1]");
    if (!in01(r_acc)) throw InvariantError("r_acc must be in [0,1]");
    if (!in01(aggregated)) throw InvariantError("aggregated must be in [0,1]");
    if ((r_step_correctness | r_knowledge_acc | importance_hard | label) & ~1) {
        throw InvariantError("binary fields must be 0 or 1");
    }
    double expected_acc = 0.5 * (r_step_correctness + omega_k * r_knowledge_acc);
    if (std::fabs(r_acc - expected_acc) > 1e-12) {
        throw InvariantError("r_acc must equal 0.5*(r_step_correctness + omega_k*r_knowledge_acc)");
    }
    if (label != (aggregated >= step_threshold ? 1 : 0)) {
        throw InvariantError("label must be 1 iff aggregated >= step threshold");
    }
    if (importance_hard != (r_importance > 0.0 ? 1 : 0)) {
        throw InvariantError("importance_hard must be 1 iff r_importance > 0");
    }
}

void TrajectoryAnnotation::validate(double eta, double traj_threshold) const {
    if (r_out != 0 && r_out != 1) throw InvariantError("r_out must be 0 or 1");
    if (!(std::isfinite(r_cover) && r_cover >= 0.0 && r_cover <= 1.0)) {
        throw InvariantError("r_cover must be in [0,1]");
    }
    if (std::fabs(score - (r_out + eta * r_cover)) > 1e-12) {
        throw InvariantError("score must equal r_out + eta*r_cover");
    }
    if (label != (score >= traj_threshold ? 1 : 0)) {
        throw InvariantError("label must be 1 iff score >= trajectory threshold");
    }
}

void CandidatePool::validate() const {
    if (candidates.empty()) throw InvariantError("candidates must be non-empty");
    if (gold_answer && gold_answer->empty()) {
        throw InvariantError("gold_answer must be a non-empty subset of A..Z when present");
    }
}

void PipelineConfig::validate() const {
    check_range("omega_k", omega_k, 0.0, 1e18);
    check_range("eta", eta, 0.0, 1e18);
    check_range("lambda", lambda, 0.0, 1e18);
    check_range("zeta", zeta, 0.0, 1e18);
    check_range("delta", delta, 0.0, 1.0);
    check_range("step_threshold", step_threshold, 0.0, 1.0, true, true);
    if (!std::isfinite(traj_threshold)) throw ConfigError("traj_threshold must be finite");
    if (rollouts_n < 1) throw ConfigError("rollouts_n must be >= 1");
    if (group_n < 2) throw ConfigError("group_n must be >= 2");
    check_range("kl_beta", kl_beta, 0.0, 1e18);
    check_range("clip_eps", clip_eps, 0.0, 1.0, true, true);
    check_range("softmax_temperature", softmax_temperature, 0.0, 1e18, true);
    if (qual_combine != "mean" && qual_combine != "min") {
        throw ConfigError("qual_combine must be 'mean' or 'min'");
    }
    check_range("step_fail_fraction", step_fail_fraction, 0.0, 1.0);
    check_range("rollout_temperature", rollout_temperature, 0.0, 1e18);
    if (parallelism < 1) throw ConfigError("parallelism must be >= 1");
    if (retry_attempts < 1) throw ConfigError("retry_attempts must be >= 1");
    if (retry_backoff_ms < 0) throw ConfigError("retry_backoff_ms must be >= 0");
    if (request_timeout_s < 1) throw ConfigError("request_timeout_s must be >= 1");
    if (max_tokens < 1) throw ConfigError("max_tokens must be >= 1");
}

}  // namespace finreward
