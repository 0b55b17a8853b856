#pragma once

#include <stdexcept>
#include <string>

namespace scenario_critic {

/// File and parse problems (missing files, malformed XML/JSON, bad numbers).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario model invariant breaches surfaced as exceptions.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Completion backend failures, each carrying its failure class.
class BackendError : public std::runtime_error {
public:
    enum class Kind { Network, HttpStatus, Auth, ReplayMiss, Config };

    BackendError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Structured-output violations. The kind lets retry loops distinguish a
/// missing JSON object from a key/type/range problem; `raw_text` keeps the
/// offending model output for audit.
class SchemaError : public std::runtime_error {
public:
    enum class Kind { NoJson, MissingKey, WrongKind, OutOfRange, ExhaustedRetries };

    SchemaError(Kind kind, const std::string& what, std::string raw_text = {})
        : std::runtime_error(what), kind_(kind), raw_text_(std::move(raw_text)) {}
    Kind kind() const { return kind_; }
    const std::string& raw_text() const { return raw_text_; }

private:
    Kind kind_;
    std::string raw_text_;
};

}  // namespace scenario_critic
