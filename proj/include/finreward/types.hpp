#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finreward/option_set.hpp"

namespace finreward {

// One extracted (term, explanation) pair from an expert analysis.
struct KnowledgeEntry {
    std::string term;
    std::string explanation;
};

// Term -> explanation reference used for factual grounding. Terms are unique
// case-insensitively after trimming; explanations are non-empty.
struct KnowledgeBase {
    std::vector<KnowledgeEntry> entries;

    bool empty() const { return entries.empty(); }
    size_t size() const { return entries.size(); }

    // Throws InvariantError on duplicate terms or empty explanations.
    void validate() const;
};

// One (question, trace, answer, knowledge, gold) record -- the pipeline's
// unit of work.
struct ReasoningSample {
    std::string id;
    std::string question;
    std::vector<std::string> trace_steps;
    std::string solution;
    KnowledgeBase knowledge;
    std::optional<OptionSet> gold_answer;
    std::optional<std::string> expert_analysis;

    void validate() const;
};

// Per-step reward components, the aggregated score, and the binary label.
struct StepAnnotation {
    int step_index = 0;  // 1-based
    double r_importance = 0.0;
    int importance_hard = 0;
    double r_qual = 0.0;
    int r_step_correctness = 0;
    int r_knowledge_acc = 0;
    double r_acc = 0.0;
    double aggregated = 0.0;
    int label = 0;

    // Checks the arithmetic invariants for the configured omega_k and
    // thresholds (absolute tolerance 1e-12).
    void validate(double omega_k, double step_threshold) const;
};

// Trajectory-level outcome/coverage components and label.
struct TrajectoryAnnotation {
    int r_out = 0;
    double r_cover = 0.0;
    double score = 0.0;
    int label = 0;

    void validate(double eta, double traj_threshold) const;
};

// Full annotation record for one sample, as stored in annotations.jsonl.
struct SampleAnnotation {
    std::string id;
    std::vector<StepAnnotation> steps;
    TrajectoryAnnotation trajectory;
    bool ungrounded = false;  // knowledge-grounded signals were vacuous (empty K_x)
};

// One generated candidate answer: trace plus final solution text.
struct Candidate {
    std::vector<std::string> trace_steps;
    std::string solution;
};

// N generated responses to one question, the unit for BoN / selection / RL.
struct CandidatePool {
    std::string question_id;
    std::string question;
    std::optional<OptionSet> gold_answer;
    std::vector<Candidate> candidates;

    void validate() const;
};

// Every tunable the pipelines read. Defaults follow the published
// hyperparameter tables; load_config() validates the stated ranges.
struct PipelineConfig {
    double omega_k = 1.0;         // >= 0, knowledge-accuracy weight
    double eta = 1.5;             // >= 0, coverage weight in trajectory score
    double traj_threshold = 1.25;
    double step_threshold = 0.5;
    double lambda = 1.0;          // >= 0, trajectory loss weight
    double zeta = 1.0;            // >= 0, trajectory weight in ranking score
    double delta = 0.5;           // [0,1], process-reward weight in RL reward
    int rollouts_n = 8;           // >= 1
    int group_n = 6;              // >= 2
    double kl_beta = 0.001;       // >= 0
    double clip_eps = 0.2;        // (0,1)
    double softmax_temperature = 1.0;  // > 0, exposed for the ablation harness
    std::string qual_combine = "mean";  // mean | min over the three sub-scores
    double step_fail_fraction = 0.2;    // sample fails above this fraction
    double rollout_temperature = 0.7;
    bool leak_gold = false;  // literal reading: include y in rollout prompts
    int parallelism = 8;     // max in-flight gateway requests / batch threads

    // Backend wiring.
    std::string backend = "mock";  // mock | remote | scripted path
    std::string base_url = "http://127.0.0.1:8080";
    std::string chat_path = "/v1/chat/completions";
    std::string model_generator = "generator-model";
    std::string model_rollout = "rollout-model";
    std::string model_judge = "judge-model";
    std::string model_extractor = "extractor-model";
    std::string api_key_env = "FINREWARD_API_KEY";
    std::string cache_dir;  // empty = cache disabled
    int retry_attempts = 3;
    int retry_backoff_ms = 1000;  // doubled per attempt: 1s/2s/4s
    int request_timeout_s = 120;
    int max_tokens = 1024;

    // Throws ConfigError naming the field and its range.
    void validate() const;
};

}  // namespace finreward
