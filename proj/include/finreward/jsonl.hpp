#pragma once

#include <functional>
#include <string>
#include <vector>

#include "finreward/types.hpp"

namespace finreward {

// Unknown-field handling for the JSONL readers. Strict rejects, lenient
// ignores with a warning via the supplied sink.
struct ParseOptions {
    bool strict = false;
    std::function<void(const std::string&)> warn;  // optional
};

// One record per line, UTF-8. Parsers validate every type invariant and
// throw SchemaError (with a field path) or InvariantError.
ReasoningSample parse_sample(const std::string& line, const ParseOptions& opts = {});
std::string serialize_sample(const ReasoningSample& sample);

CandidatePool parse_pool(const std::string& line, const ParseOptions& opts = {});
std::string serialize_pool(const CandidatePool& pool);

// Annotation records validate arithmetic invariants against the supplied
// config (omega_k, eta, thresholds).
SampleAnnotation parse_annotation(const std::string& line, const PipelineConfig& cfg,
                                  const ParseOptions& opts = {});
std::string serialize_annotation(const SampleAnnotation& ann);

// Splits a raw thought block into steps on blank-line boundaries, trimming
// each fragment and dropping empty ones. Throws DomainError when nothing
// remains.
std::vector<std::string> split_trace(const std::string& raw_thought);

// Inverse of split_trace for round-trip checks.
std::string join_trace(const std::vector<std::string>& steps);

// Reads every line of a JSONL file (skipping blank lines). Throws IoError.
std::vector<std::string> read_lines(const std::string& path);

// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace finreward
