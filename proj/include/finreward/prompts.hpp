#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finreward/types.hpp"

namespace finreward {

// Every LLM role the pipeline talks to.
enum class RoleTag {
    generator,
    rollout,
    qual_judge,
    procedural_judge,
    factual_judge,
    coverage_judge,
    knowledge_extractor,
    scorer,  // remote PRM endpoint speaking the same protocol
};

const char* role_name(RoleTag tag);
std::optional<RoleTag> role_from_name(const std::string& name);

struct ChatMessage {
    std::string speaker;  // "system" | "user" | "assistant"
    std::string text;
};

struct ChatRequest {
    RoleTag role_tag = RoleTag::generator;
    std::string model;
    std::vector<ChatMessage> messages;
    double temperature = 0.0;
    int max_tokens = 1024;
    // Distinguishes otherwise-identical sampled requests (one cache entry
    // per rollout); sent as the chat-completions "seed" field.
    std::optional<int> seed;

    // Canonical serialization used for cache keys and mock derivation.
    std::string canonical() const;
};

// Everything a template may need. render_prompt checks that the fields its
// role requires are present and errors naming the missing placeholder.
struct PromptContext {
    std::optional<std::string> question;
    std::optional<std::vector<std::string>> history;  // steps s_1..s_{t-1}
    std::optional<std::string> step;                  // s_t
    std::optional<OptionSet> gold;
    std::optional<KnowledgeBase> knowledge;
    std::optional<std::string> analysis;   // y_analysis
    std::optional<std::string> response;   // s (+) a for coverage
    std::optional<int> rollout_seed;
};

// Substitutes the context into the role's template. Prompt text matches the
// published listings byte-for-byte modulo placeholder substitution (golden
// tested). Throws TemplateError when a required placeholder has no value,
// and for coverage_judge with an empty knowledge base.
ChatRequest render_prompt(RoleTag role, const PromptContext& ctx,
                          const PipelineConfig& cfg);

}  // namespace finreward
