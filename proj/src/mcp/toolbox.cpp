#include "agentmesh/mcp/toolbox.hpp"

#include "agentmesh/a2a/card.hpp" // is_semver
#include "agentmesh/common/ids.hpp"

#include <chrono>
#include <set>

namespace agentmesh::mcp {

ToolDescription tool_description_from_json(const json& value) {
    if (!value.is_object()) {
        throw SchemaError("tool description must be a JSON object");
    }
    ToolDescription tool;
    tool.tool_id = value.value("tool_id", "");
    if (tool.tool_id.empty()) {
        throw SchemaError("tool description requires a non-empty tool_id");
    }
    tool.name = value.value("name", "");
    tool.description = value.value("description", "");
    tool.version = value.value("version", "");
    if (!a2a::is_semver(tool.version)) {
        throw SchemaError("tool version is not MAJOR.MINOR.PATCH: " + tool.version);
    }

    if (!value.contains("functions") || !value.at("functions").is_array() ||
        value.at("functions").empty()) {
        throw SchemaError("tool description requires a non-empty functions array");
    }
    std::set<std::string> names;
    for (const json& fn : value.at("functions")) {
        if (!fn.is_object()) {
            throw SchemaError("function spec must be a JSON object");
        }
        FunctionSpec spec;
        spec.name = fn.value("name", "");
        if (spec.name.empty()) {
            throw SchemaError("function spec requires a non-empty name");
        }
        if (!names.insert(spec.name).second) {
            throw SchemaError("function name repeated: " + spec.name);
        }
        spec.description = fn.value("description", "");
        if (!fn.contains("params_schema")) {
            throw SchemaError(spec.name + ": function spec requires params_schema");
        }
        spec.params_schema = parse_schema(fn.at("params_schema"));
        if (spec.params_schema.type != SchemaType::object_t) {
            throw SchemaError(spec.name + ": params_schema must be an object schema");
        }
        if (!fn.contains("returns_schema")) {
            throw SchemaError(spec.name + ": function spec requires returns_schema");
        }
        spec.returns_schema = parse_schema(fn.at("returns_schema"));
        tool.functions.push_back(std::move(spec));
    }

    if (value.contains("examples")) {
        if (!value.at("examples").is_array()) {
            throw SchemaError("examples must be a JSON array");
        }
        for (const json& example : value.at("examples")) {
            ToolExample entry;
            entry.function = example.value("function", "");
            entry.params = example.value("params", json::object());
            entry.result = example.contains("result") ? example.at("result") : json();
            tool.examples.push_back(std::move(entry));
        }
    }
    return tool;
}

ToolDescription parse_tool_description(const std::string& text) {
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) {
        throw ParseError("tool description is not valid JSON");
    }
    return tool_description_from_json(value);
}

json tool_description_to_json(const ToolDescription& tool) {
    json functions = json::array();
    for (const FunctionSpec& spec : tool.functions) {
        functions.push_back(json{
            {"name", spec.name},
            {"description", spec.description},
            {"params_schema", emit_schema(spec.params_schema)},
            {"returns_schema", emit_schema(spec.returns_schema)},
        });
    }
    json value = json{
        {"tool_id", tool.tool_id},
        {"name", tool.name},
        {"description", tool.description},
        {"version", tool.version},
        {"functions", functions},
    };
    if (!tool.examples.empty()) {
        json examples = json::array();
        for (const ToolExample& example : tool.examples) {
            examples.push_back(json{{"function", example.function},
                                    {"params", example.params},
                                    {"result", example.result}});
        }
        value["examples"] = examples;
    }
    return value;
}

namespace {

// Handler-facing view of a variables map; the map either belongs to a
// stored session or is a throwaway local for session-less calls.
class MapSessionAccess : public SessionAccess {
public:
    explicit MapSessionAccess(std::map<std::string, json>& variables)
        : variables_(variables) {}

    std::optional<json> get(const std::string& key) override {
        auto it = variables_.find(key);
        if (it == variables_.end()) return std::nullopt;
        return it->second;
    }

    void set(const std::string& key, json value) override {
        variables_[key] = std::move(value);
    }

private:
    std::map<std::string, json>& variables_;
};

json violations_to_json(const std::vector<SchemaViolation>& violations) {
    json out = json::array();
    for (const SchemaViolation& violation : violations) {
        if (!violation.warning) out.push_back(to_json(violation));
    }
    return out;
}

} // namespace

void Toolbox::register_tool(const ToolDescription& description,
                            std::map<std::string, FunctionHandler> handlers) {
    std::set<std::string> specced;
    for (const FunctionSpec& spec : description.functions) {
        specced.insert(spec.name);
        if (!handlers.count(spec.name)) {
            throw SchemaError("HANDLER_MISMATCH",
                              description.tool_id + ": no handler for " + spec.name);
        }
    }
    for (const auto& [name, handler] : handlers) {
        if (!specced.count(name)) {
            throw SchemaError("HANDLER_MISMATCH",
                              description.tool_id + ": handler without function spec: " + name);
        }
    }
    auto tool = std::make_shared<RegisteredTool>();
    tool->description = description;
    tool->handlers = std::move(handlers);
    std::unique_lock lock(tools_mutex_);
    tools_[description.tool_id] = std::move(tool);
}

std::shared_ptr<const Toolbox::RegisteredTool>
Toolbox::find_tool(const std::string& tool_id) const {
    std::shared_lock lock(tools_mutex_);
    auto it = tools_.find(tool_id);
    if (it == tools_.end()) return nullptr;
    return it->second;
}

ToolCallOutcome Toolbox::call_function(const std::string& tool_id, const std::string& function,
                                       const json& params,
                                       const std::optional<std::string>& session_id) {
    ToolCallOutcome outcome;

    auto tool = find_tool(tool_id);
    if (!tool) {
        outcome.error = TaskError{errc::tool_not_found, "no such tool: " + tool_id, false};
        return outcome;
    }

    const FunctionSpec* spec = nullptr;
    for (const FunctionSpec& candidate : tool->description.functions) {
        if (candidate.name == function) {
            spec = &candidate;
            break;
        }
    }
    if (!spec) {
        outcome.error = TaskError{errc::fn_not_found,
                                  tool_id + " has no function " + function, false};
        return outcome;
    }

    auto param_violations = validate_value(spec->params_schema, params);
    json hard = violations_to_json(param_violations);
    if (!hard.empty()) {
        outcome.error = TaskError{errc::param_invalid,
                                  function + ": parameters do not match schema", false};
        outcome.details["violations"] = hard;
        return outcome;
    }

    // session-less calls still hand the handler a (throwaway) context
    std::map<std::string, json> scratch;
    json result_value;
    auto started = std::chrono::steady_clock::now();
    try {
        if (session_id) {
            std::lock_guard lock(sessions_mutex_);
            auto it = sessions_.find(*session_id);
            if (it == sessions_.end()) {
                outcome.error = TaskError{errc::unknown_session,
                                          "no such session: " + *session_id, false};
                return outcome;
            }
            MapSessionAccess access(it->second.variables);
            result_value = tool->handlers.at(function)(params, access);
            it->second.updated_at = now_utc_iso8601();
        } else {
            MapSessionAccess access(scratch);
            result_value = tool->handlers.at(function)(params, access);
        }
    } catch (const std::exception& e) {
        outcome.error = TaskError{errc::exec_failed, function + ": " + e.what(), false};
        return outcome;
    }
    auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - started);

    auto result_violations = validate_value(spec->returns_schema, result_value);
    json bad_result = violations_to_json(result_violations);
    if (!bad_result.empty()) {
        outcome.error = TaskError{errc::exec_failed,
                                  function + ": result does not match returns schema", false};
        outcome.details["stage"] = "RESULT_SCHEMA";
        outcome.details["violations"] = bad_result;
        return outcome;
    }

    outcome.result = ToolCallResult{result_value, function, elapsed.count()};
    return outcome;
}

std::optional<ToolDescription> Toolbox::get_tool(const std::string& tool_id) const {
    auto tool = find_tool(tool_id);
    if (!tool) return std::nullopt;
    return tool->description;
}

std::vector<ToolDescription> Toolbox::all_tools() const {
    std::shared_lock lock(tools_mutex_);
    std::vector<ToolDescription> result;
    result.reserve(tools_.size());
    for (const auto& [tool_id, tool] : tools_) result.push_back(tool->description);
    return result;
}

std::string Toolbox::open_session() {
    std::lock_guard lock(sessions_mutex_);
    std::string session_id = uuid4();
    Session session;
    session.created_at = now_utc_iso8601();
    session.updated_at = session.created_at;
    sessions_[session_id] = std::move(session);
    return session_id;
}

void Toolbox::update_context(const std::string& session_id, const std::string& key,
                             json value) {
    std::lock_guard lock(sessions_mutex_);
    auto it = sessions_.find(session_id);
    if (it == sessions_.end()) {
        throw TaskOpError(errc::unknown_session, "no such session: " + session_id);
    }
    it->second.variables[key] = std::move(value);
    it->second.updated_at = now_utc_iso8601();
}

std::optional<json> Toolbox::read_context(const std::string& session_id,
                                          const std::string& key) {
    std::lock_guard lock(sessions_mutex_);
    auto it = sessions_.find(session_id);
    if (it == sessions_.end()) {
        throw TaskOpError(errc::unknown_session, "no such session: " + session_id);
    }
    auto entry = it->second.variables.find(key);
    if (entry == it->second.variables.end()) return std::nullopt;
    return entry->second;
}

void Toolbox::close_session(const std::string& session_id) {
    std::lock_guard lock(sessions_mutex_);
    if (sessions_.erase(session_id) == 0) {
        throw TaskOpError(errc::unknown_session, "no such session: " + session_id);
    }
}

} // namespace agentmesh::mcp
