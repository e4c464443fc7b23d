#pragma once

#include "agentmesh/common/errors.hpp"
#include "agentmesh/common/json.hpp"
#include "agentmesh/mcp/schema.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace agentmesh::mcp {

struct FunctionSpec {
    std::string name;
    std::string description;
    SchemaNode params_schema;  // always an object schema
    SchemaNode returns_schema;

    bool operator==(const FunctionSpec&) const = default;
};

struct ToolExample {
    std::string function;
    json params;
    json result;

    bool operator==(const ToolExample&) const = default;
};

struct ToolDescription {
    std::string tool_id;
    std::string name;
    std::string description;
    std::string version; // semver
    std::vector<FunctionSpec> functions;
    std::vector<ToolExample> examples;

    bool operator==(const ToolDescription&) const = default;
};

// Throws ParseError on malformed JSON, SchemaError on contract breaks
// (empty tool_id, no functions, duplicate function names, bad version,
// non-object params schema, schema invariant violations).
ToolDescription parse_tool_description(const std::string& text);
ToolDescription tool_description_from_json(const json& value);
json tool_description_to_json(const ToolDescription& tool);

// Session variables as seen from inside a handler. When the call carries
// no session id this is an ephemeral map that dies with the call.
class SessionAccess {
public:
    virtual ~SessionAccess() = default;
    virtual std::optional<json> get(const std::string& key) = 0;
    virtual void set(const std::string& key, json value) = 0;
};

using FunctionHandler = std::function<json(const json& params, SessionAccess& session)>;

struct ToolCallResult {
    json value;
    std::string function;
    double duration_ms = 0.0;
};

// Either a result or an error, never both.
struct ToolCallOutcome {
    std::optional<ToolCallResult> result;
    std::optional<TaskError> error;
    json details = json::object(); // violations, RESULT_SCHEMA marker, ...

    bool ok() const { return result.has_value(); }
};

// Registered tools plus session state. Reads run concurrently; handlers
// execute outside the registry lock.
class Toolbox {
public:
    // Binds a description to one handler per function. Throws
    // SchemaError(HANDLER_MISMATCH) unless handlers and functions match
    // exactly. Re-registering a tool_id replaces the binding.
    void register_tool(const ToolDescription& description,
                       std::map<std::string, FunctionHandler> handlers);

    // Pipeline: tool lookup -> function lookup -> params validation ->
    // handler -> result validation. Error codes in that precedence:
    // TOOL_NOT_FOUND, FN_NOT_FOUND, PARAM_INVALID, EXEC_FAILED (handler
    // threw), EXEC_FAILED with details.stage=RESULT_SCHEMA.
    ToolCallOutcome call_function(const std::string& tool_id, const std::string& function,
                                  const json& params,
                                  const std::optional<std::string>& session_id = std::nullopt);

    std::optional<ToolDescription> get_tool(const std::string& tool_id) const;
    std::vector<ToolDescription> all_tools() const; // tool_id ascending

    // Sessions: read-after-write within a session, no leakage across
    // sessions, every operation on a closed/unknown id throws
    // TaskOpError(UNKNOWN_SESSION).
    std::string open_session();
    void update_context(const std::string& session_id, const std::string& key, json value);
    std::optional<json> read_context(const std::string& session_id, const std::string& key);
    void close_session(const std::string& session_id);

private:
    struct RegisteredTool {
        ToolDescription description;
        std::map<std::string, FunctionHandler> handlers;
    };

    struct Session {
        std::map<std::string, json> variables;
        std::string created_at;
        std::string updated_at;
    };

    std::shared_ptr<const RegisteredTool> find_tool(const std::string& tool_id) const;

    mutable std::shared_mutex tools_mutex_;
    std::map<std::string, std::shared_ptr<const RegisteredTool>> tools_;

    mutable std::mutex sessions_mutex_;
    std::map<std::string, Session> sessions_;
};

} // namespace agentmesh::mcp
