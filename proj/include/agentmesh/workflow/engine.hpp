#pragma once

#include "agentmesh/workflow/state.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace agentmesh::workflow {

using Handler = std::function<WorkflowState(WorkflowState)>;
using Router = std::function<std::string(const WorkflowState&)>;

struct TraceStep {
    NodeId node;
    std::string label; // router label, "plain" for a plain edge, "" at a terminal
    double duration_ms = 0.0;
};

struct ExecutionTrace {
    std::vector<TraceStep> steps;
};

// (node, label) sequence only — durations vary run to run.
std::vector<std::pair<NodeId, std::string>> trace_path(const ExecutionTrace& trace);
std::string trace_to_jsonl(const ExecutionTrace& trace);

class GraphError : public ProtocolError {
public:
    GraphError(std::string code, const std::string& message)
        : ProtocolError(std::move(code), message) {}
};

// Aborted run; carries whatever trace was accumulated before the failure.
class WorkflowError : public ProtocolError {
public:
    WorkflowError(std::string code, const std::string& message, ExecutionTrace trace)
        : ProtocolError(std::move(code), message), trace_(std::move(trace)) {}

    const ExecutionTrace& trace() const noexcept { return trace_; }

private:
    ExecutionTrace trace_;
};

// Directed graph of state handlers. A node routes onward through either a
// plain edge or a conditional (router + label mapping), never both.
class WorkflowGraph {
public:
    void add_node(const NodeId& id, Handler handler);          // DUPLICATE_NODE
    void add_edge(const NodeId& from, const NodeId& to);       // UNKNOWN_NODE, CONFLICTING_EDGE
    void add_conditional_edges(const NodeId& from, Router router,
                               std::map<std::string, NodeId> mapping);
    void set_entry(const NodeId& id);                          // UNKNOWN_NODE
    void add_terminal(const NodeId& id);                       // UNKNOWN_NODE

    bool has_node(const NodeId& id) const;
    const NodeId& entry() const;

private:
    friend struct RunAccess;

    struct Conditional {
        Router router;
        std::map<std::string, NodeId> mapping;
    };

    std::map<NodeId, Handler> nodes_;
    std::map<NodeId, NodeId> edges_;
    std::map<NodeId, Conditional> conditional_edges_;
    NodeId entry_;
    std::set<NodeId> terminals_;
};

struct RunResult {
    WorkflowState state;
    ExecutionTrace trace;
};

inline constexpr int default_step_budget = 64;

// Executes from entry until a terminal node, following plain edges and
// router labels. A handler exception routes to the node mapped from label
// "error" when the current node has one (the failure is appended to
// state.errors), otherwise the run aborts. Throws WorkflowError with codes
// BUDGET_EXCEEDED, NODE_FAILURE, ROUTER_LABEL_UNKNOWN.
RunResult run_workflow(const WorkflowGraph& graph, WorkflowState initial,
                       int budget = default_step_budget);

} // namespace agentmesh::workflow
