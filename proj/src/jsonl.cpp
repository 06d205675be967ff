#include "finreward/jsonl.hpp"

#include <json.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "finreward/errors.hpp"

namespace finreward {

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

json parse_object(const std::string& line, const char* what) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw SchemaError(what, "line is not valid JSON");
    if (!j.is_object()) throw SchemaError(what, "record must be a JSON object");
    return j;
}

void check_unknown(const json& j, const std::set<std::string>& known,
                   const std::string& path, const ParseOptions& opts) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (known.count(it.key())) continue;
        std::string where = path.empty() ? it.key() : path + "." + it.key();
        if (opts.strict) throw SchemaError(where, "unknown field");
        if (opts.warn) opts.warn("ignoring unknown field '" + where + "'");
    }
}

const json& require(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + key, "missing required field");
    return *it;
}

std::string require_string(const json& j, const char* key, const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_string()) throw SchemaError(path + key, "expected a string");
    return v.get<std::string>();
}

double require_number(const json& j, const char* key, const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_number()) throw SchemaError(path + key, "expected a number");
    return v.get<double>();
}

int require_binary(const json& j, const char* key, const std::string& path) {
    const json& v = require(j, key, path);
    if (v.is_boolean()) return v.get<bool>() ? 1 : 0;
    if (v.is_number_integer()) {
        int n = v.get<int>();
        if (n == 0 || n == 1) return n;
    }
    throw SchemaError(path + key, "expected 0 or 1");
}

std::vector<std::string> require_string_list(const json& j, const char* key,
                                             const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_array()) throw SchemaError(path + key, "expected an array of strings");
    std::vector<std::string> out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string()) {
            throw SchemaError(path + key + "[" + std::to_string(i) + "]",
                              "expected a string");
        }
        out.push_back(v[i].get<std::string>());
    }
    return out;
}

KnowledgeBase parse_knowledge(const json& v, const std::string& path,
                              const ParseOptions& opts) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of {term, explanation}");
    KnowledgeBase kb;
    for (size_t i = 0; i < v.size(); ++i) {
        std::string epath = path + "[" + std::to_string(i) + "].";
        if (!v[i].is_object()) throw SchemaError(path + "[" + std::to_string(i) + "]",
                                                 "expected an object");
        check_unknown(v[i], {"term", "explanation"}, path + "[" + std::to_string(i) + "]", opts);
        kb.entries.push_back({require_string(v[i], "term", epath),
                              require_string(v[i], "explanation", epath)});
    }
    return kb;
}

json knowledge_to_json(const KnowledgeBase& kb) {
    json arr = json::array();
    for (const auto& e : kb.entries) {
        arr.push_back({{"term", e.term}, {"explanation", e.explanation}});
    }
    return arr;
}

OptionSet parse_gold(const json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected an option-letter string");
    auto set = OptionSet::parse(v.get<std::string>());
    if (!set) throw SchemaError(path, "no option letters in gold answer");
    return *set;
}

Candidate parse_candidate(const json& v, const std::string& path, const ParseOptions& opts) {
    if (!v.is_object()) throw SchemaError(path, "expected an object");
    check_unknown(v, {"trace_steps", "solution"}, path, opts);
    Candidate c;
    c.trace_steps = require_string_list(v, "trace_steps", path + ".");
    c.solution = require_string(v, "solution", path + ".");
    return c;
}

}  // namespace

ReasoningSample parse_sample(const std::string& line, const ParseOptions& opts) {
    json j = parse_object(line, "sample");
    check_unknown(j,
                  {"id", "question", "trace_steps", "solution", "knowledge",
                   "gold_answer", "expert_analysis"},
                  "", opts);
    ReasoningSample s;
    s.id = require_string(j, "id", "");
    s.question = require_string(j, "question", "");
    s.trace_steps = require_string_list(j, "trace_steps", "");
    s.solution = require_string(j, "solution", "");
    if (auto it = j.find("knowledge"); it != j.end() && !it->is_null()) {
        s.knowledge = parse_knowledge(*it, "knowledge", opts);
    }
    if (auto it = j.find("gold_answer"); it != j.end() && !it->is_null()) {
        s.gold_answer = parse_gold(*it, "gold_answer");
    }
    if (auto it = j.find("expert_analysis"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) throw SchemaError("expert_analysis", "expected a string");
        s.expert_analysis = it->get<std::string>();
    }
    s.validate();
    return s;
}

std::string serialize_sample(const ReasoningSample& s) {
    json j;
    j["id"] = s.id;
    j["question"] = s.question;
    j["trace_steps"] = s.trace_steps;
    j["solution"] = s.solution;
    j["knowledge"] = knowledge_to_json(s.knowledge);
    if (s.gold_answer) j["gold_answer"] = s.gold_answer->str();
    if (s.expert_analysis) j["expert_analysis"] = *s.expert_analysis;
    return j.dump();
}

CandidatePool parse_pool(const std::string& line, const ParseOptions& opts) {
    json j = parse_object(line, "pool");
    check_unknown(j, {"question_id", "question", "gold_answer", "candidates"}, "", opts);
    CandidatePool p;
    p.question_id = require_string(j, "question_id", "");
    p.question = require_string(j, "question", "");
    if (auto it = j.find("gold_answer"); it != j.end() && !it->is_null()) {
        p.gold_answer = parse_gold(*it, "gold_answer");
    }
    const json& cands = require(j, "candidates", "");
    if (!cands.is_array()) throw SchemaError("candidates", "expected an array");
    for (size_t i = 0; i < cands.size(); ++i) {
        p.candidates.push_back(
            parse_candidate(cands[i], "candidates[" + std::to_string(i) + "]", opts));
    }
    p.validate();
    return p;
}

std::string serialize_pool(const CandidatePool& p) {
    json j;
    j["question_id"] = p.question_id;
    j["question"] = p.question;
    if (p.gold_answer) j["gold_answer"] = p.gold_answer->str();
    json cands = json::array();
    for (const auto& c : p.candidates) {
        cands.push_back({{"trace_steps", c.trace_steps}, {"solution", c.solution}});
    }
    j["candidates"] = std::move(cands);
    return j.dump();
}

SampleAnnotation parse_annotation(const std::string& line, const PipelineConfig& cfg,
                                  const ParseOptions& opts) {
    json j = parse_object(line, "annotation");
    check_unknown(j, {"id", "steps", "trajectory", "ungrounded"}, "", opts);
    SampleAnnotation a;
    a.id = require_string(j, "id", "");
    const json& steps = require(j, "steps", "");
    if (!steps.is_array() || steps.empty()) {
        throw SchemaError("steps", "expected a non-empty array");
    }
    for (size_t i = 0; i < steps.size(); ++i) {
        std::string path = "steps[" + std::to_string(i) + "].";
        const json& sj = steps[i];
        if (!sj.is_object()) throw SchemaError(path, "expected an object");
        check_unknown(sj,
                      {"step_index", "r_importance", "importance_hard", "r_qual",
                       "r_step_correctness", "r_knowledge_acc", "r_acc", "aggregated",
                       "label"},
                      "steps[" + std::to_string(i) + "]", opts);
        StepAnnotation sa;
        sa.step_index = static_cast<int>(require_number(sj, "step_index", path));
        sa.r_importance = require_number(sj, "r_importance", path);
        sa.importance_hard = require_binary(sj, "importance_hard", path);
        sa.r_qual = require_number(sj, "r_qual", path);
        sa.r_step_correctness = require_binary(sj, "r_step_correctness", path);
        sa.r_knowledge_acc = require_binary(sj, "r_knowledge_acc", path);
        sa.r_acc = require_number(sj, "r_acc", path);
        sa.aggregated = require_number(sj, "aggregated", path);
        sa.label = require_binary(sj, "label", path);
        sa.validate(cfg.omega_k, cfg.step_threshold);
        a.steps.push_back(sa);
    }
    const json& tj = require(j, "trajectory", "");
    if (!tj.is_object()) throw SchemaError("trajectory", "expected an object");
    check_unknown(tj, {"r_out", "r_cover", "score", "label"}, "trajectory", opts);
    a.trajectory.r_out = require_binary(tj, "r_out", "trajectory.");
    a.trajectory.r_cover = require_number(tj, "r_cover", "trajectory.");
    a.trajectory.score = require_number(tj, "score", "trajectory.");
    a.trajectory.label = require_binary(tj, "label", "trajectory.");
    a.trajectory.validate(cfg.eta, cfg.traj_threshold);
    if (auto it = j.find("ungrounded"); it != j.end()) {
        if (!it->is_boolean()) throw SchemaError("ungrounded", "expected a boolean");
        a.ungrounded = it->get<bool>();
    }
    return a;
}

std::string serialize_annotation(const SampleAnnotation& a) {
    json j;
    j["id"] = a.id;
    json steps = json::array();
    for (const auto& s : a.steps) {
        steps.push_back({{"step_index", s.step_index},
                         {"r_importance", s.r_importance},
                         {"importance_hard", s.importance_hard},
                         {"r_qual", s.r_qual},
                         {"r_step_correctness", s.r_step_correctness},
                         {"r_knowledge_acc", s.r_knowledge_acc},
                         {"r_acc", s.r_acc},
                         {"aggregated", s.aggregated},
                         {"label", s.label}});
    }
    j["steps"] = std::move(steps);
    j["trajectory"] = {{"r_out", a.trajectory.r_out},
                       {"r_cover", a.trajectory.r_cover},
                       {"score", a.trajectory.score},
                       {"label", a.trajectory.label}};
    j["ungrounded"] = a.ungrounded;
    return j.dump();
}

std::vector<std::string> split_trace(const std::string& raw_thought) {
    std::vector<std::string> steps;
    size_t pos = 0;
    while (pos <= raw_thought.size()) {
        size_t next = raw_thought.find("\n\n", pos);
        std::string frag = next == std::string::npos
                               ? raw_thought.substr(pos)
                               : raw_thought.substr(pos, next - pos);
        frag = trim(frag);
        if (!frag.empty()) steps.push_back(std::move(frag));
        if (next == std::string::npos) break;
        pos = next + 2;
    }
    if (steps.empty()) throw DomainError("split_trace: no steps in thought block");
    return steps;
}

std::string join_trace(const std::vector<std::string>& steps) {
    std::string out;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out += "\n\n";
        out += steps[i];
    }
    return out;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!trim(line).empty()) lines.push_back(line);
    }
    return lines;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    fs::path target(path);
    fs::path dir = target.parent_path();
    if (!dir.empty()) fs::create_directories(dir);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw IoError("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("rename " + tmp.string() + " -> " + path + ": " + ec.message());
    }
}

}  // namespace finreward
