#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "finreward/prompts.hpp"
#include "finreward/types.hpp"

namespace finreward {

// ---------------------------------------------------------------------------
// Verdicts

struct QualScores {
    double logical_soundness = 0.0;
    double step_correctness = 0.0;
    double target_progression = 0.0;

    // Collapse to the scalar quality score; mode is "mean" or "min".
    double combined(const std::string& mode) const;
};

struct CoveragePayload {
    int coverage_number = 0;
    std::vector<int> coverage_index;
};

struct ScorePayload {
    std::vector<double> step_probs;
    double traj_prob = 0.5;
};

struct JudgeVerdict {
    RoleTag role_tag = RoleTag::qual_judge;
    // int carries the binary procedural/factual assertion.
    std::variant<QualScores, int, CoveragePayload, KnowledgeBase, ScorePayload> payload;
};

// Extracts the first well-formed JSON value in `raw` that matches the
// role's schema, tolerating surrounding prose and code fences. Values up to
// 1e-6 outside [0,1] are clamped with a warning; anything further is a
// validation error. `knowledge_count` bounds coverage indices when >= 0.
// Throws ParseError (carrying the raw text) and never crashes on arbitrary
// input.
JudgeVerdict parse_verdict(RoleTag role, const std::string& raw,
                           int knowledge_count = -1,
                           const std::function<void(const std::string&)>& warn = {});

// ---------------------------------------------------------------------------
// Backends

// One completion attempt. Implementations throw TransportError on failure;
// retrying is the gateway's job.
class Backend {
public:
    virtual ~Backend() = default;
    virtual std::string complete_raw(const ChatRequest& request) = 0;
    // Stable identity mixed into cache keys (distinct mock seeds must not
    // share cache entries).
    virtual std::string id() const = 0;
};

// Deterministic offline backend: replies are a pure function of
// (seed, request content). Rollout replies end with a parseable option
// letter; judge replies are schema-valid.
class MockBackend : public Backend {
public:
    explicit MockBackend(uint64_t seed) : seed_(seed) {}
    std::string complete_raw(const ChatRequest& request) override;
    std::string id() const override { return "mock:" + std::to_string(seed_); }

private:
    uint64_t seed_;
};

// Reply table for fixtures. Entries match on role / seed / substring; an
// entry may fail with a transport error a fixed number of times before
// succeeding. Unmatched requests fall through to the fallback backend when
// one is set.
class ScriptedBackend : public Backend {
public:
    struct Entry {
        std::optional<RoleTag> role;
        std::optional<int> seed;
        std::optional<std::string> match_substring;
        std::string reply;
        int fail_times = 0;
    };

    ScriptedBackend() = default;
    // Loads entries from a JSONL file with fields
    // {role?, seed?, match?, reply, fail_times?}.
    static ScriptedBackend from_file(const std::string& path);

    void add(Entry entry) { entries_.push_back(std::move(entry)); }
    void set_fallback(std::shared_ptr<Backend> fallback) { fallback_ = std::move(fallback); }

    std::string complete_raw(const ChatRequest& request) override;
    std::string id() const override { return "scripted"; }

private:
    std::vector<Entry> entries_;
    std::shared_ptr<Backend> fallback_;
    std::mutex mutex_;
};

// OpenAI-style chat-completions client over HTTP. Reads the API key from
// the environment variable named in the config.
class RemoteBackend : public Backend {
public:
    explicit RemoteBackend(const PipelineConfig& cfg);
    std::string complete_raw(const ChatRequest& request) override;
    std::string id() const override { return "remote:" + base_url_ + chat_path_; }

private:
    std::string base_url_;
    std::string chat_path_;
    std::string api_key_;
    int timeout_s_;
};

// ---------------------------------------------------------------------------
// Disk cache

// Content-addressed reply cache: one file per request hash with a checksum
// header line. Corrupt entries read as misses.
class DiskCache {
public:
    explicit DiskCache(std::string dir) : dir_(std::move(dir)) {}

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;

private:
    std::string dir_;
};

// ---------------------------------------------------------------------------
// Gateway

struct CompletionResult {
    std::string text;
    bool cache_hit = false;
    int attempts = 0;  // network attempts made (0 on cache hit)
};

struct GatewayStats {
    std::atomic<uint64_t> requests{0};
    std::atomic<uint64_t> cache_hits{0};
    std::atomic<uint64_t> network_calls{0};
    std::atomic<uint64_t> retries{0};
};

// Front door for every LLM call: cache lookup, bounded retries with
// exponential backoff, and an in-flight concurrency cap.
class Gateway {
public:
    Gateway(std::shared_ptr<Backend> backend, const PipelineConfig& cfg,
            std::function<void(const std::string&)> warn = {});

    CompletionResult complete(const ChatRequest& request);

    const GatewayStats& stats() const { return stats_; }
    std::string cache_key(const ChatRequest& request) const;

private:
    std::shared_ptr<Backend> backend_;
    std::unique_ptr<DiskCache> cache_;
    int retry_attempts_;
    int backoff_ms_;
    int parallelism_;
    std::function<void(const std::string&)> warn_;
    GatewayStats stats_;
    std::unique_ptr<class Semaphore> semaphore_;
};

// Builds the backend selected by cfg.backend: "mock" (uses `seed`),
// "remote", or "scripted:<path>".
std::shared_ptr<Backend> make_backend(const PipelineConfig& cfg, uint64_t seed);

}  // namespace finreward
