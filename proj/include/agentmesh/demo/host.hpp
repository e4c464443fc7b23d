#pragma once

#include "agentmesh/a2a/card.hpp"
#include "agentmesh/demo/agents.hpp"
#include "agentmesh/demo/orchestrator.hpp"
#include "agentmesh/service/transport.hpp"

#include <memory>
#include <string>
#include <vector>

namespace agentmesh::demo {

struct RuntimePaths {
    std::string card_dir;
    std::string tool_dir;
    std::string fixture_path;
    std::string alias_path;
    std::string event_log_path; // optional task event log, empty = off
};

// The fully wired case-study runtime: agent cards in a registry, fixture
// tools in a toolbox, one ToolBackedAgent per specialist, and the
// orchestrator — all reachable through the in-process AgentHost.
class Runtime {
public:
    explicit Runtime(const RuntimePaths& paths);

    // Sends a user query to the orchestrator agent over the in-process
    // transport and returns the response message (status processed with
    // body {"document": ...}, or status failed).
    a2a::A2AMessage ask(const std::string& query, const std::string& user_id = "user");

    a2a::Registry& registry() { return registry_; }
    mcp::Toolbox& toolbox() { return toolbox_; }
    tasks::TaskStore& task_store() { return *tasks_; }
    service::AgentHost& host() { return host_; }
    Orchestrator& orchestrator() { return *orchestrator_; }
    const std::string& orchestrator_id() const { return orchestrator_->agent_id(); }

private:
    a2a::Registry registry_;
    mcp::Toolbox toolbox_;
    std::unique_ptr<tasks::TaskStore> tasks_;
    service::AgentHost host_;
    std::shared_ptr<const StockFixture> fixture_;
    std::shared_ptr<const TickerAliasTable> aliases_;
    std::vector<std::unique_ptr<ToolBackedAgent>> agents_;
    std::unique_ptr<Orchestrator> orchestrator_;
};

} // namespace agentmesh::demo
