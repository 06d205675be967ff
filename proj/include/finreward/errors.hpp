#pragma once

#include <stdexcept>
#include <string>

namespace finreward {

// Base for every error the library throws. Subclasses carry the failure
// taxonomy the CLI maps onto exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input record; message carries the JSON field path.
class SchemaError : public Error {
public:
    SchemaError(const std::string& field_path, const std::string& msg)
        : Error(field_path + ": " + msg), field_path_(field_path) {}
    const std::string& field_path() const { return field_path_; }

private:
    std::string field_path_;
};

// A domain-type invariant was violated; message names the invariant.
class InvariantError : public Error {
public:
    using Error::Error;
};

// Bad argument to a pure operation (empty list, out-of-range scalar, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Prompt template could not be rendered; names the missing placeholder.
class TemplateError : public Error {
public:
    using Error::Error;
};

// Model reply could not be turned into a structured verdict. Keeps the raw
// text for the audit trail.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::string raw)
        : Error(msg), raw_(std::move(raw)) {}
    const std::string& raw() const { return raw_; }

private:
    std::string raw_;
};

// Network / HTTP failure after all retries; carries the attempt count.
class TransportError : public Error {
public:
    TransportError(const std::string& msg, int attempts)
        : Error(msg + " (after " + std::to_string(attempts) + " attempts)"),
          attempts_(attempts) {}
    int attempts() const { return attempts_; }

private:
    int attempts_ = 0;
};

// Configuration value outside its documented range.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Filesystem failure (open/write/rename).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace finreward
