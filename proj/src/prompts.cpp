#include "finreward/prompts.hpp"

#include <json.hpp>

#include <sstream>

#include "finreward/errors.hpp"

namespace finreward {

namespace {

// Verbatim prompt templates. Placeholder tokens in square brackets are
// replaced byte-exactly at render time.

constexpr const char* kGenerationTemplate =
    R"(Your role as an assistant involves thoroughly exploring questions through a systematic long thinking process before providing the final precise and accurate solutions. This requires engaging in a comprehensive cycle of analysis, summarizing, exploration, reassessment, reflection, backtracing, and iteration to develop a well-considered thinking process. Please structure your response into two main sections: Thought and Solution.

In the Thought section, detail your reasoning process using the specified format:
<|begin_of_thought|>
{thought with steps separated with '\n\n'}
<|end_of_thought|>
Each step should include detailed considerations such as analyzing questions, summarizing relevant findings, brainstorming new ideas, verifying the accuracy of the current steps, refining any errors, and revisiting previous steps.

In the Solution section, based on various attempts, explorations, and reflections from the Thought section, systematically present the final solution that you deem correct. The solution should maintain a logical, accurate, concise expression style and detail necessary steps needed to reach the conclusion, formatted as follows:
<|begin_of_solution|>
{final formatted, precise, and clear solution}
<|end_of_solution|>

Now, try to solve the following question through the above guidelines:
[Question Text])";

constexpr const char* kExtractionTemplate =
    R"(You are a financial knowledge extraction expert. Read the following expert analysis and identify all key financial terms and concepts. For each term, provide a concise definition based on the text.

**Expert Analysis Text:**
[Expert Analysis from the Dataset]

---
**Your Task:**
Output a JSON list where each object represents a key knowledge point.

**Output Format (JSON list only):**
[
  {
    "Term": "<Identified_Term_1>",
    "Explanation": "<Definition_of_Term_1>"
  },
  {
    "Term": "<Identified_Term_2>",
    "Explanation": "<Definition_of_Term_2>"
  }
])";

constexpr const char* kQualTemplate =
    R"(You are an expert financial analyst. Given the question, the previous reasoning steps, and the current step, evaluate the quality of the **current step**.

**Question:**
[Original Question Text]

**Reasoning History:**
[Reasoning History up to step t-1]

**Current Step to Evaluate:**
[Text of step t]

---
**Your Task:**
Provide a JSON object with your evaluation based on three criteria:
1.  `logical_soundness`: How logical is the current step?
2.  `step_correctness`: Is the information in the step correct?
3.  `target_progression`: Does the step help solve the problem?

**Output Format (JSON only):**
{
  "logical_soundness": <float_from_0_to_1>,
  "step_correctness": <float_from_0_to_1>,
  "target_progression": <float_from_0_to_1>
})";

constexpr const char* kProceduralTemplate =
    R"(You are a logical verifier. Given the reasoning so far and the known correct answer, determine if the current step is a logically sound and productive move towards that answer.

**Question:**
[Original Question Text]

**Reasoning History:**
[Reasoning History up to step t-1]

**Correct Final Answer:**
[Ground Truth Answer y]

**Current Step to Evaluate:**
[Text of step t]

---
**Your Task:**
Is this step a valid, logical progression towards the correct final answer? Respond with a JSON object containing a binary value.

**Output Format (JSON only):**
{ "procedural_correctness": <1_for_yes_or_0_for_no> })";

constexpr const char* kFactualTemplate =
    R"(You are a fact-checking agent. Verify every factual claim and financial term in the "Current Step" against the provided "Knowledge Base".

**Knowledge Base:**
[Knowledge Base Entries]

**Current Step to Evaluate:**
[Text of step t]

---
**Your Task:**
Are all claims and terms in the current step supported by the knowledge base? Respond with a JSON object containing a binary value.

**Output Format (JSON only):**
{ "factual_accuracy": <1_if_all_claims_are_supported_or_0_otherwise> })";

constexpr const char* kCoverageTemplate =
    R"(You are a verification agent. Your task is to check if the required financial knowledge points were used in the provided model response.

**Required Knowledge Points:**
[Numbered Knowledge Points]

**Model's Reasoning Trace and Answer:**
[Model's Full Generated Response]

---
**Your Task:**
Analyze the model's response and determine how many of the required knowledge points were covered. Output a JSON object with the count and indices of the covered points.

**Output Format (JSON only):**
{
  "coverage_number": <integer>,
  "coverage_index": [<list_of_covered_indices>]
})";

// Continuation prompt for importance rollouts (no published listing; kept
// in the same register as the other templates).
constexpr const char* kRolloutTemplate =
    R"(You are a financial reasoning assistant. Continue the reasoning below until you reach a final answer. Keep the step-by-step style, separating steps with blank lines, and finish with one line of the form "Therefore, the correct answer is X." where X is the chosen option letter or letters.

**Question:**
[Original Question Text]

**Reasoning So Far:**
[Reasoning History up to step t]

Continue the reasoning from here and state the final answer.)";

// As above, plus the ground truth; only used when the config asks for the
// literal leak-gold reading.
constexpr const char* kRolloutLeakGoldTemplate =
    R"(You are a financial reasoning assistant. Continue the reasoning below until you reach a final answer. Keep the step-by-step style, separating steps with blank lines, and finish with one line of the form "Therefore, the correct answer is X." where X is the chosen option letter or letters.

**Question:**
[Original Question Text]

**Known Correct Answer:**
[Ground Truth Answer y]

**Reasoning So Far:**
[Reasoning History up to step t]

Continue the reasoning from here and state the final answer.)";

void substitute(std::string& text, const std::string& marker, const std::string& value) {
    size_t pos = text.find(marker);
    if (pos == std::string::npos) {
        throw TemplateError("template has no placeholder '" + marker + "'");
    }
    text.replace(pos, marker.size(), value);
}

template <typename T>
const T& need(const std::optional<T>& field, const char* placeholder) {
    if (!field) {
        throw TemplateError(std::string("missing placeholder value for '") +
                            placeholder + "'");
    }
    return *field;
}

std::string render_history(const std::vector<std::string>& steps) {
    if (steps.empty()) return "(none)";
    std::string out;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out += "\n\n";
        out += steps[i];
    }
    return out;
}

std::string bullet_knowledge(const KnowledgeBase& kb) {
    std::string out;
    for (size_t i = 0; i < kb.entries.size(); ++i) {
        if (i) out += "\n";
        out += "- " + kb.entries[i].term + ": " + kb.entries[i].explanation;
    }
    return out;
}

std::string numbered_knowledge(const KnowledgeBase& kb) {
    std::string out;
    for (size_t i = 0; i < kb.entries.size(); ++i) {
        if (i) out += "\n";
        out += std::to_string(i + 1) + ". " + kb.entries[i].term + ": " +
               kb.entries[i].explanation;
    }
    return out;
}

}  // namespace

const char* role_name(RoleTag tag) {
    switch (tag) {
        case RoleTag::generator: return "generator";
        case RoleTag::rollout: return "rollout";
        case RoleTag::qual_judge: return "qual_judge";
        case RoleTag::procedural_judge: return "procedural_judge";
        case RoleTag::factual_judge: return "factual_judge";
        case RoleTag::coverage_judge: return "coverage_judge";
        case RoleTag::knowledge_extractor: return "knowledge_extractor";
        case RoleTag::scorer: return "scorer";
    }
    return "unknown";
}

std::optional<RoleTag> role_from_name(const std::string& name) {
    for (RoleTag t : {RoleTag::generator, RoleTag::rollout, RoleTag::qual_judge,
                      RoleTag::procedural_judge, RoleTag::factual_judge,
                      RoleTag::coverage_judge, RoleTag::knowledge_extractor,
                      RoleTag::scorer}) {
        if (name == role_name(t)) return t;
    }
    return std::nullopt;
}

std::string ChatRequest::canonical() const {
    nlohmann::json j;
    j["role"] = role_name(role_tag);
    j["model"] = model;
    j["temperature"] = temperature;
    j["max_tokens"] = max_tokens;
    if (seed) j["seed"] = *seed;
    nlohmann::json msgs = nlohmann::json::array();
    for (const auto& m : messages) msgs.push_back({{"speaker", m.speaker}, {"text", m.text}});
    j["messages"] = std::move(msgs);
    return j.dump();
}

ChatRequest render_prompt(RoleTag role, const PromptContext& ctx,
                          const PipelineConfig& cfg) {
    std::string text;
    ChatRequest req;
    req.role_tag = role;
    req.max_tokens = cfg.max_tokens;
    req.temperature = 0.0;  // judge determinism; overridden for sampling roles

    switch (role) {
        case RoleTag::generator: {
            text = kGenerationTemplate;
            substitute(text, "[Question Text]", need(ctx.question, "[Question Text]"));
            req.model = cfg.model_generator;
            req.temperature = cfg.rollout_temperature;
            break;
        }
        case RoleTag::rollout: {
            text = cfg.leak_gold ? kRolloutLeakGoldTemplate : kRolloutTemplate;
            substitute(text, "[Original Question Text]",
                       need(ctx.question, "[Original Question Text]"));
            if (cfg.leak_gold) {
                substitute(text, "[Ground Truth Answer y]",
                           need(ctx.gold, "[Ground Truth Answer y]").str());
            }
            substitute(text, "[Reasoning History up to step t]",
                       render_history(need(ctx.history, "[Reasoning History up to step t]")));
            req.model = cfg.model_rollout;
            req.temperature = cfg.rollout_temperature;
            req.seed = ctx.rollout_seed;
            break;
        }
        case RoleTag::qual_judge: {
            text = kQualTemplate;
            substitute(text, "[Original Question Text]",
                       need(ctx.question, "[Original Question Text]"));
            substitute(text, "[Reasoning History up to step t-1]",
                       render_history(need(ctx.history, "[Reasoning History up to step t-1]")));
            substitute(text, "[Text of step t]", need(ctx.step, "[Text of step t]"));
            req.model = cfg.model_judge;
            break;
        }
        case RoleTag::procedural_judge: {
            text = kProceduralTemplate;
            substitute(text, "[Original Question Text]",
                       need(ctx.question, "[Original Question Text]"));
            substitute(text, "[Reasoning History up to step t-1]",
                       render_history(need(ctx.history, "[Reasoning History up to step t-1]")));
            substitute(text, "[Ground Truth Answer y]",
                       need(ctx.gold, "[Ground Truth Answer y]").str());
            substitute(text, "[Text of step t]", need(ctx.step, "[Text of step t]"));
            req.model = cfg.model_judge;
            break;
        }
        case RoleTag::factual_judge: {
            const KnowledgeBase& kb = need(ctx.knowledge, "[Knowledge Base Entries]");
            if (kb.empty()) {
                throw TemplateError("factual_judge: knowledge base is empty, nothing to verify");
            }
            text = kFactualTemplate;
            substitute(text, "[Knowledge Base Entries]", bullet_knowledge(kb));
            substitute(text, "[Text of step t]", need(ctx.step, "[Text of step t]"));
            req.model = cfg.model_judge;
            break;
        }
        case RoleTag::coverage_judge: {
            const KnowledgeBase& kb = need(ctx.knowledge, "[Numbered Knowledge Points]");
            if (kb.empty()) {
                throw TemplateError("coverage_judge: knowledge base is empty, nothing to verify");
            }
            text = kCoverageTemplate;
            substitute(text, "[Numbered Knowledge Points]", numbered_knowledge(kb));
            substitute(text, "[Model's Full Generated Response]",
                       need(ctx.response, "[Model's Full Generated Response]"));
            req.model = cfg.model_judge;
            break;
        }
        case RoleTag::knowledge_extractor: {
            text = kExtractionTemplate;
            substitute(text, "[Expert Analysis from the Dataset]",
                       need(ctx.analysis, "[Expert Analysis from the Dataset]"));
            req.model = cfg.model_extractor;
            break;
        }
        case RoleTag::scorer: {
            // The remote scorer carries a structured sample, not a listing.
            nlohmann::json j;
            j["question"] = need(ctx.question, "question");
            j["steps"] = need(ctx.history, "steps");
            j["solution"] = need(ctx.response, "solution");
            text = "Score each reasoning step and the whole trajectory. Reply with JSON "
                   "{\"step_probs\": [<one float per step>], \"traj_prob\": <float>}.\n" +
                   j.dump();
            req.model = cfg.model_judge;
            break;
        }
    }

    req.messages.push_back({"user", std::move(text)});
    return req;
}

}  // namespace finreward
