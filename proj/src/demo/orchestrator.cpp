#include "agentmesh/demo/orchestrator.hpp"

#include <algorithm>

namespace agentmesh::demo {

using workflow::Intent;
using workflow::WorkflowState;

Orchestrator::Orchestrator(std::string agent_id, service::TransportPort& transport,
                           std::shared_ptr<const StockFixture> fixture,
                           std::shared_ptr<const TickerAliasTable> aliases,
                           AgentDirectory agents)
    : agent_id_(std::move(agent_id)), transport_(transport), fixture_(std::move(fixture)),
      aliases_(std::move(aliases)), agents_(std::move(agents)) {}

namespace {

bool contains_any(const std::string& haystack, std::initializer_list<const char*> needles) {
    for (const char* needle : needles) {
        if (haystack.find(needle) != std::string::npos) return true;
    }
    return false;
}

TaskError error_from_body(const json& body, const std::string& fallback) {
    if (body.contains("error") && body.at("error").is_object()) {
        try {
            return task_error_from_json(body.at("error"));
        } catch (const ProtocolError&) {
            // fall through to the generic record below
        }
    }
    return TaskError{errc::exec_failed, fallback, false};
}

} // namespace

WorkflowState Orchestrator::parse_request(WorkflowState state) const {
    const std::string folded = fold_case_and_trim(state.request);

    std::vector<Intent> intents;
    auto add = [&intents](Intent intent) {
        if (std::find(intents.begin(), intents.end(), intent) == intents.end()) {
            intents.push_back(intent);
        }
    };
    if (contains_any(folded, {"price"})) add(Intent::price);
    if (contains_any(folded, {"news"})) add(Intent::news);
    if (contains_any(folded, {"company", "status", "overview"})) add(Intent::company_info);
    if (contains_any(folded, {"financial", "statement"})) add(Intent::financials);
    if (contains_any(folded, {"analysis", "investment perspective", "outlook"})) {
        add(Intent::analysis);
    }
    if (std::find(intents.begin(), intents.end(), Intent::analysis) != intents.end()) {
        // analysis draws on everything, so it pulls in all four data intents
        add(Intent::price);
        add(Intent::news);
        add(Intent::company_info);
        add(Intent::financials);
    }

    // canonical intent order regardless of keyword positions
    static const Intent canonical[] = {Intent::price, Intent::news, Intent::company_info,
                                       Intent::financials, Intent::analysis};
    for (Intent intent : canonical) {
        if (std::find(intents.begin(), intents.end(), intent) != intents.end()) {
            state.intents.push_back(intent);
        }
    }

    state.tickers = extract_tickers(state.request, *aliases_, fixture_->symbols());

    if (state.intents.empty()) {
        state.errors.push_back(TaskError{errc::unparseable_request,
                                         "no recognizable request keywords", false});
    } else if (state.tickers.empty()) {
        state.errors.push_back(TaskError{errc::unparseable_request,
                                         "no known company or ticker in request", false});
    }
    return state;
}

WorkflowState Orchestrator::plan_tasks(WorkflowState state) const {
    if (!state.plan.empty()) return state; // re-entered from a work node
    for (Intent intent : state.intents) {
        switch (intent) {
        case Intent::price: state.plan.push_back("get_stock_data"); break;
        case Intent::news: state.plan.push_back("get_news_data"); break;
        case Intent::company_info: state.plan.push_back("get_company_info"); break;
        case Intent::financials: state.plan.push_back("get_financial_data"); break;
        case Intent::analysis: state.plan.push_back("analyze_data"); break;
        }
    }
    state.plan.push_back("generate_response");
    return state;
}

std::string Orchestrator::route_after_planning(const WorkflowState& state) const {
    if (!state.errors.empty()) return "error";
    if (state.plan_cursor >= state.plan.size()) return "error";
    return state.plan[state.plan_cursor];
}

WorkflowState Orchestrator::data_hop(WorkflowState state, const std::string& agent,
                                     const std::string& capability,
                                     const std::string& slot) const {
    state.plan_cursor += 1;
    if (state.tickers.empty()) {
        state.errors.push_back(TaskError{errc::missing_data,
                                         capability + ": no ticker to look up", false});
        return state;
    }
    json parameters = json{{"symbol", state.tickers.front()}};
    try {
        a2a::A2AMessage request = a2a::make_message(
            agent_id_, agent,
            json{{"capability", capability}, {"parameters", parameters}});
        a2a::A2AMessage response = transport_.send(request);
        if (response.header.status == a2a::status::processed) {
            state.data_slots[slot] = response.body.value("result", json::object());
        } else {
            state.errors.push_back(
                error_from_body(response.body, capability + " request failed"));
        }
    } catch (const ProtocolError& e) {
        state.errors.push_back(TaskError{e.code(), e.what(), false});
    }
    return state;
}

WorkflowState Orchestrator::get_stock_data(WorkflowState state) const {
    return data_hop(std::move(state), agents_.stock, "get_stock_price", "stock");
}

WorkflowState Orchestrator::get_news_data(WorkflowState state) const {
    return data_hop(std::move(state), agents_.news, "get_news", "news");
}

WorkflowState Orchestrator::get_company_info(WorkflowState state) const {
    return data_hop(std::move(state), agents_.company, "get_company_info", "company");
}

WorkflowState Orchestrator::get_financial_data(WorkflowState state) const {
    return data_hop(std::move(state), agents_.financial, "get_financials", "financials");
}

WorkflowState Orchestrator::analyze_data(WorkflowState state) const {
    state.plan_cursor += 1;
    bool any_data = state.data_slots.count("stock") || state.data_slots.count("news") ||
                    state.data_slots.count("company") || state.data_slots.count("financials");
    if (!any_data) {
        state.errors.push_back(TaskError{errc::missing_data,
                                         "analysis requires at least one data slot", false});
        return state;
    }
    json parameters = json{{"symbol", state.tickers.empty() ? "" : state.tickers.front()}};
    for (const char* slot : {"stock", "news", "company", "financials"}) {
        auto it = state.data_slots.find(slot);
        if (it != state.data_slots.end()) parameters[slot] = it->second;
    }
    try {
        a2a::A2AMessage request = a2a::make_message(
            agent_id_, agents_.analysis,
            json{{"capability", "generate_analysis"}, {"parameters", parameters}});
        a2a::A2AMessage response = transport_.send(request);
        if (response.header.status == a2a::status::processed) {
            state.data_slots["analysis"] = response.body.value("result", json::object());
        } else {
            state.errors.push_back(error_from_body(response.body, "analysis request failed"));
        }
    } catch (const ProtocolError& e) {
        state.errors.push_back(TaskError{e.code(), e.what(), false});
    }
    return state;
}

namespace {

json errors_to_json(const std::vector<TaskError>& errors) {
    json out = json::array();
    for (const TaskError& error : errors) out.push_back(to_json(error));
    return out;
}

} // namespace

WorkflowState Orchestrator::generate_response(WorkflowState state) const {
    json sections = json::array();
    // section order is fixed; "stock" data is published as the "price" section
    const std::pair<const char*, const char*> order[] = {
        {"stock", "price"}, {"news", "news"}, {"company", "company"},
        {"financials", "financials"}, {"analysis", "analysis"}};
    for (const auto& [slot, section] : order) {
        auto it = state.data_slots.find(slot);
        if (it != state.data_slots.end()) {
            sections.push_back(json{{"name", section}, {"content", it->second}});
        }
    }
    sections.push_back(json{{"name", "errors"}, {"content", errors_to_json(state.errors)}});
    state.response = json{{"query", state.request}, {"sections", sections}};
    return state;
}

WorkflowState Orchestrator::handle_error(WorkflowState state) const {
    std::string summary = "request failed";
    for (std::size_t i = 0; i < state.errors.size(); ++i) {
        summary += (i == 0 ? ": " : ", ") + state.errors[i].code;
    }
    json sections = json::array();
    sections.push_back(json{{"name", "errors"}, {"content", errors_to_json(state.errors)}});
    state.response = json{{"query", state.request},
                          {"summary", summary},
                          {"sections", sections}};
    return state;
}

workflow::WorkflowGraph Orchestrator::build_graph() const {
    workflow::WorkflowGraph graph;
    graph.add_node("parse_request", [this](WorkflowState s) { return parse_request(std::move(s)); });
    graph.add_node("plan_tasks", [this](WorkflowState s) { return plan_tasks(std::move(s)); });
    graph.add_node("get_stock_data", [this](WorkflowState s) { return get_stock_data(std::move(s)); });
    graph.add_node("get_news_data", [this](WorkflowState s) { return get_news_data(std::move(s)); });
    graph.add_node("get_company_info", [this](WorkflowState s) { return get_company_info(std::move(s)); });
    graph.add_node("get_financial_data", [this](WorkflowState s) { return get_financial_data(std::move(s)); });
    graph.add_node("analyze_data", [this](WorkflowState s) { return analyze_data(std::move(s)); });
    graph.add_node("generate_response", [this](WorkflowState s) { return generate_response(std::move(s)); });
    graph.add_node("handle_error", [this](WorkflowState s) { return handle_error(std::move(s)); });

    graph.add_edge("parse_request", "plan_tasks");
    graph.add_conditional_edges(
        "plan_tasks",
        [this](const WorkflowState& s) { return route_after_planning(s); },
        {
            {"get_stock_data", "get_stock_data"},
            {"get_news_data", "get_news_data"},
            {"get_company_info", "get_company_info"},
            {"get_financial_data", "get_financial_data"},
            {"analyze_data", "analyze_data"},
            {"generate_response", "generate_response"},
            {"error", "handle_error"},
        });
    // work nodes hand control back to the planner's router
    graph.add_edge("get_stock_data", "plan_tasks");
    graph.add_edge("get_news_data", "plan_tasks");
    graph.add_edge("get_company_info", "plan_tasks");
    graph.add_edge("get_financial_data", "plan_tasks");
    graph.add_edge("analyze_data", "plan_tasks");

    graph.set_entry("parse_request");
    graph.add_terminal("generate_response");
    graph.add_terminal("handle_error");
    return graph;
}

Orchestrator::QueryOutcome Orchestrator::run_query(const std::string& query,
                                                   int budget) const {
    workflow::WorkflowGraph graph = build_graph();
    WorkflowState initial;
    initial.request = query;
    workflow::RunResult run = workflow::run_workflow(graph, std::move(initial), budget);
    json document = run.state.response
                        ? *run.state.response
                        : json{{"query", query},
                               {"sections", json::array({json{{"name", "errors"},
                                                              {"content", json::array()}}})}};
    return QueryOutcome{std::move(document), std::move(run.trace)};
}

json normalize_for_comparison(json value) {
    if (value.is_object()) {
        json out = json::object();
        for (auto& [key, entry] : value.items()) {
            if (key == "message_id" || key == "task_id" || key == "timestamp" ||
                key == "duration_ms" || key == "registered_at") {
                out[key] = "<normalized>";
            } else {
                out[key] = normalize_for_comparison(entry);
            }
        }
        return out;
    }
    if (value.is_array()) {
        json out = json::array();
        for (auto& entry : value) out.push_back(normalize_for_comparison(entry));
        return out;
    }
    return value;
}

} // namespace agentmesh::demo
