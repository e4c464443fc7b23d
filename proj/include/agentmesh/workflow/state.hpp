#pragma once

#include "agentmesh/common/errors.hpp"
#include "agentmesh/common/json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace agentmesh::workflow {

// What the user asked for; analysis implies the four data intents.
enum class Intent { price, news, company_info, financials, analysis };

std::string to_string(Intent intent);

using NodeId = std::string;

// The mutable request state threaded through workflow nodes. data_slots
// keys in use: stock, news, company, financials, analysis.
struct WorkflowState {
    std::string request;
    std::vector<Intent> intents;
    std::vector<std::string> tickers;
    std::vector<NodeId> plan;
    std::size_t plan_cursor = 0;
    std::map<std::string, json> data_slots;
    std::vector<TaskError> errors;
    std::optional<json> response;
};

} // namespace agentmesh::workflow
