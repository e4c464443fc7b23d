#pragma once

#include "agentmesh/common/json.hpp"

#include <stdexcept>
#include <string>

namespace agentmesh {

// Shared error-code vocabulary. Anything that can end up in a TaskError
// (task records, tool-call failures, workflow error slots, wire error
// bodies) must use one of these.
namespace errc {
inline constexpr const char* tool_not_found = "TOOL_NOT_FOUND";
inline constexpr const char* fn_not_found = "FN_NOT_FOUND";
inline constexpr const char* param_invalid = "PARAM_INVALID";
inline constexpr const char* exec_failed = "EXEC_FAILED";
inline constexpr const char* timeout = "TIMEOUT";
inline constexpr const char* auth_failed = "AUTH_FAILED";
inline constexpr const char* unknown_task = "UNKNOWN_TASK";
inline constexpr const char* illegal_transition = "ILLEGAL_TRANSITION";
inline constexpr const char* unknown_agent = "UNKNOWN_AGENT";
inline constexpr const char* unknown_session = "UNKNOWN_SESSION";
inline constexpr const char* unparseable_request = "UNPARSEABLE_REQUEST";
inline constexpr const char* missing_data = "MISSING_DATA";
inline constexpr const char* duplicate_artifact = "DUPLICATE_ARTIFACT";
} // namespace errc

bool is_known_error_code(const std::string& code);

// Error record attached to failed tasks and carried through workflow
// state and wire error bodies.
struct TaskError {
    std::string code;
    std::string message;
    bool retryable = false;

    bool operator==(const TaskError&) const = default;
};

json to_json(const TaskError& error);
TaskError task_error_from_json(const json& value);

// Base for everything thrown by the runtime; carries a machine-readable
// code next to the human message.
class ProtocolError : public std::runtime_error {
public:
    ProtocolError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class ParseError : public ProtocolError {
public:
    explicit ParseError(const std::string& message)
        : ProtocolError("PARSE_ERROR", message) {}
};

class SchemaError : public ProtocolError {
public:
    explicit SchemaError(const std::string& message)
        : ProtocolError("SCHEMA_ERROR", message) {}
    SchemaError(std::string code, const std::string& message)
        : ProtocolError(std::move(code), message) {}
};

class TaskOpError : public ProtocolError {
public:
    TaskOpError(std::string code, const std::string& message)
        : ProtocolError(std::move(code), message) {}
};

class ConfigError : public ProtocolError {
public:
    explicit ConfigError(const std::string& message)
        : ProtocolError("CONFIG_ERROR", message) {}
};

} // namespace agentmesh
