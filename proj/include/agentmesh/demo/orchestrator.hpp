#pragma once

#include "agentmesh/demo/fixtures.hpp"
#include "agentmesh/service/transport.hpp"
#include "agentmesh/tasks/store.hpp"
#include "agentmesh/workflow/engine.hpp"

#include <memory>
#include <string>

namespace agentmesh::demo {

// agent_id of the specialist answering each data/analysis node.
struct AgentDirectory {
    std::string stock = "stock-price-agent";
    std::string news = "news-agent";
    std::string company = "company-info-agent";
    std::string financial = "financial-info-agent";
    std::string analysis = "analysis-agent";
};

// The coordinating agent of the stock-information case study: keyword
// request parsing, ticker extraction, planning, one A2A hop per data need,
// and response assembly — all driven through a workflow graph.
class Orchestrator {
public:
    Orchestrator(std::string agent_id, service::TransportPort& transport,
                 std::shared_ptr<const StockFixture> fixture,
                 std::shared_ptr<const TickerAliasTable> aliases,
                 AgentDirectory agents = {});

    struct QueryOutcome {
        json document;
        workflow::ExecutionTrace trace;
    };

    QueryOutcome run_query(const std::string& query,
                           int budget = workflow::default_step_budget) const;

    // Graph shape: parse_request -> plan_tasks; plan_tasks routes by plan
    // cursor (or to handle_error once anything failed); every work node
    // loops back to plan_tasks; generate_response/handle_error terminate.
    workflow::WorkflowGraph build_graph() const;

    // Node handlers and router, exposed for direct testing.
    workflow::WorkflowState parse_request(workflow::WorkflowState state) const;
    workflow::WorkflowState plan_tasks(workflow::WorkflowState state) const;
    std::string route_after_planning(const workflow::WorkflowState& state) const;
    workflow::WorkflowState get_stock_data(workflow::WorkflowState state) const;
    workflow::WorkflowState get_news_data(workflow::WorkflowState state) const;
    workflow::WorkflowState get_company_info(workflow::WorkflowState state) const;
    workflow::WorkflowState get_financial_data(workflow::WorkflowState state) const;
    workflow::WorkflowState analyze_data(workflow::WorkflowState state) const;
    workflow::WorkflowState generate_response(workflow::WorkflowState state) const;
    workflow::WorkflowState handle_error(workflow::WorkflowState state) const;

    const std::string& agent_id() const { return agent_id_; }

private:
    workflow::WorkflowState data_hop(workflow::WorkflowState state,
                                     const std::string& agent,
                                     const std::string& capability,
                                     const std::string& slot) const;

    std::string agent_id_;
    service::TransportPort& transport_;
    std::shared_ptr<const StockFixture> fixture_;
    std::shared_ptr<const TickerAliasTable> aliases_;
    AgentDirectory agents_;
};

// Strips volatile identifiers (message_id, task_id, timestamps) from a
// JSON document so responses can be compared across runs and transports.
json normalize_for_comparison(json value);

} // namespace agentmesh::demo
