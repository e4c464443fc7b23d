#pragma once

#include "agentmesh/a2a/message.hpp"
#include "agentmesh/demo/fixtures.hpp"
#include "agentmesh/mcp/toolbox.hpp"
#include "agentmesh/tasks/store.hpp"

#include <map>
#include <memory>
#include <string>

namespace agentmesh::demo {

struct CapabilityBinding {
    std::string tool_id;
    std::string function;
};

// A specialized agent: accepts A2A requests shaped
// {"capability": "...", "parameters": {...}}, tracks each request as a
// task, and serves it through one bound MCP tool function. Responds with
// status processed and {"result": ...}, or status failed and {"error": ...}.
class ToolBackedAgent {
public:
    ToolBackedAgent(std::string agent_id, mcp::Toolbox& toolbox, tasks::TaskStore& tasks,
                    std::map<std::string, CapabilityBinding> bindings);

    a2a::A2AMessage handle(const a2a::A2AMessage& request);

    const std::string& agent_id() const { return agent_id_; }

private:
    std::string agent_id_;
    mcp::Toolbox& toolbox_;
    tasks::TaskStore& tasks_;
    std::map<std::string, CapabilityBinding> bindings_;
};

// Registers the four case-study tools (stock_data, web_scraper,
// financial_data, analysis_engine) with handlers reading `fixture`.
// Descriptions are parsed from JSON files in `tool_dir`.
void register_fixture_tools(mcp::Toolbox& toolbox, const std::string& tool_dir,
                            std::shared_ptr<const StockFixture> fixture);

// The deterministic stand-in for the analysis engine: SWOT lists plus a
// verdict derived from the collected data by fixed sign rules.
json build_analysis(const json& params);

} // namespace agentmesh::demo
