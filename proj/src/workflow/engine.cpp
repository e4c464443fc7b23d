#include "agentmesh/workflow/engine.hpp"

#include <chrono>
#include <sstream>

namespace agentmesh::workflow {

std::string to_string(Intent intent) {
    switch (intent) {
    case Intent::price: return "price";
    case Intent::news: return "news";
    case Intent::company_info: return "company_info";
    case Intent::financials: return "financials";
    case Intent::analysis: return "analysis";
    }
    return "price";
}

std::vector<std::pair<NodeId, std::string>> trace_path(const ExecutionTrace& trace) {
    std::vector<std::pair<NodeId, std::string>> path;
    path.reserve(trace.steps.size());
    for (const TraceStep& step : trace.steps) path.emplace_back(step.node, step.label);
    return path;
}

std::string trace_to_jsonl(const ExecutionTrace& trace) {
    std::ostringstream out;
    for (const TraceStep& step : trace.steps) {
        out << canonical_dump(json{{"node", step.node},
                                   {"label", step.label},
                                   {"duration_ms", step.duration_ms}})
            << '\n';
    }
    return out.str();
}

void WorkflowGraph::add_node(const NodeId& id, Handler handler) {
    if (nodes_.count(id)) {
        throw GraphError("DUPLICATE_NODE", "node already defined: " + id);
    }
    nodes_[id] = std::move(handler);
}

void WorkflowGraph::add_edge(const NodeId& from, const NodeId& to) {
    if (!nodes_.count(from)) throw GraphError("UNKNOWN_NODE", "no such node: " + from);
    if (!nodes_.count(to)) throw GraphError("UNKNOWN_NODE", "no such node: " + to);
    if (edges_.count(from) || conditional_edges_.count(from)) {
        throw GraphError("CONFLICTING_EDGE", from + " already has an outgoing rule");
    }
    edges_[from] = to;
}

void WorkflowGraph::add_conditional_edges(const NodeId& from, Router router,
                                          std::map<std::string, NodeId> mapping) {
    if (!nodes_.count(from)) throw GraphError("UNKNOWN_NODE", "no such node: " + from);
    for (const auto& [label, target] : mapping) {
        if (!nodes_.count(target)) {
            throw GraphError("UNKNOWN_NODE", "mapping \"" + label + "\" targets unknown node: " + target);
        }
    }
    if (edges_.count(from) || conditional_edges_.count(from)) {
        throw GraphError("CONFLICTING_EDGE", from + " already has an outgoing rule");
    }
    conditional_edges_[from] = Conditional{std::move(router), std::move(mapping)};
}

void WorkflowGraph::set_entry(const NodeId& id) {
    if (!nodes_.count(id)) throw GraphError("UNKNOWN_NODE", "no such node: " + id);
    entry_ = id;
}

void WorkflowGraph::add_terminal(const NodeId& id) {
    if (!nodes_.count(id)) throw GraphError("UNKNOWN_NODE", "no such node: " + id);
    terminals_.insert(id);
}

bool WorkflowGraph::has_node(const NodeId& id) const { return nodes_.count(id) > 0; }

const NodeId& WorkflowGraph::entry() const { return entry_; }

// Lets run_workflow read the graph internals without widening the public API.
struct RunAccess {
    static const std::map<NodeId, Handler>& nodes(const WorkflowGraph& g) { return g.nodes_; }
    static const std::map<NodeId, NodeId>& edges(const WorkflowGraph& g) { return g.edges_; }
    static const std::map<NodeId, WorkflowGraph::Conditional>&
    conditionals(const WorkflowGraph& g) { return g.conditional_edges_; }
    static const std::set<NodeId>& terminals(const WorkflowGraph& g) { return g.terminals_; }
};

RunResult run_workflow(const WorkflowGraph& graph, WorkflowState initial, int budget) {
    if (budget < 1) {
        throw GraphError("BAD_BUDGET", "budget must be positive");
    }
    const auto& nodes = RunAccess::nodes(graph);
    if (graph.entry().empty() || !nodes.count(graph.entry())) {
        throw GraphError("UNKNOWN_NODE", "entry node not set");
    }

    WorkflowState state = std::move(initial);
    ExecutionTrace trace;
    NodeId current = graph.entry();

    while (true) {
        if (static_cast<int>(trace.steps.size()) >= budget) {
            throw WorkflowError("BUDGET_EXCEEDED",
                                "step budget " + std::to_string(budget) + " exhausted at " + current,
                                std::move(trace));
        }

        auto started = std::chrono::steady_clock::now();
        bool handler_failed = false;
        std::string failure;
        try {
            state = nodes.at(current)(std::move(state));
        } catch (const std::exception& e) {
            handler_failed = true;
            failure = e.what();
        }
        double duration_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();

        if (handler_failed) {
            state.errors.push_back(TaskError{errc::exec_failed, current + ": " + failure, false});
            trace.steps.push_back({current, "error", duration_ms});
            auto conditional = RunAccess::conditionals(graph).find(current);
            if (conditional != RunAccess::conditionals(graph).end() &&
                conditional->second.mapping.count("error")) {
                current = conditional->second.mapping.at("error");
                continue;
            }
            throw WorkflowError("NODE_FAILURE", current + ": " + failure, std::move(trace));
        }

        if (RunAccess::terminals(graph).count(current)) {
            trace.steps.push_back({current, "", duration_ms});
            return RunResult{std::move(state), std::move(trace)};
        }

        auto conditional = RunAccess::conditionals(graph).find(current);
        if (conditional != RunAccess::conditionals(graph).end()) {
            std::string label = conditional->second.router(state);
            trace.steps.push_back({current, label, duration_ms});
            auto target = conditional->second.mapping.find(label);
            if (target == conditional->second.mapping.end()) {
                throw WorkflowError("ROUTER_LABEL_UNKNOWN",
                                    current + ": router returned unmapped label \"" + label + "\"",
                                    std::move(trace));
            }
            current = target->second;
            continue;
        }

        auto edge = RunAccess::edges(graph).find(current);
        if (edge != RunAccess::edges(graph).end()) {
            trace.steps.push_back({current, "plain", duration_ms});
            current = edge->second;
            continue;
        }

        trace.steps.push_back({current, "", duration_ms});
        throw WorkflowError("NODE_FAILURE",
                            current + " has no outgoing rule and is not a terminal",
                            std::move(trace));
    }
}

} // namespace agentmesh::workflow
