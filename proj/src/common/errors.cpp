#include "agentmesh/common/errors.hpp"

#include <array>

namespace agentmesh {

bool is_known_error_code(const std::string& code) {
    static constexpr std::array<const char*, 13> known = {
        errc::tool_not_found,   errc::fn_not_found,
        errc::param_invalid,    errc::exec_failed,
        errc::timeout,          errc::auth_failed,
        errc::unknown_task,     errc::illegal_transition,
        errc::unknown_agent,    errc::unknown_session,
        errc::unparseable_request, errc::missing_data,
        errc::duplicate_artifact,
    };
    for (const char* candidate : known) {
        if (code == candidate) return true;
    }
    return false;
}

json to_json(const TaskError& error) {
    return json{
        {"code", error.code},
        {"message", error.message},
        {"retryable", error.retryable},
    };
}

TaskError task_error_from_json(const json& value) {
    if (!value.is_object()) {
        throw ParseError("task error must be a JSON object");
    }
    TaskError error;
    error.code = value.value("code", "");
    error.message = value.value("message", "");
    error.retryable = value.value("retryable", false);
    if (error.code.empty()) {
        throw ParseError("task error requires a non-empty code");
    }
    return error;
}

} // namespace agentmesh
