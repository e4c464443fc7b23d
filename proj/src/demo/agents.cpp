#include "agentmesh/demo/agents.hpp"

#include "agentmesh/common/ids.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace agentmesh::demo {

ToolBackedAgent::ToolBackedAgent(std::string agent_id, mcp::Toolbox& toolbox,
                                 tasks::TaskStore& tasks,
                                 std::map<std::string, CapabilityBinding> bindings)
    : agent_id_(std::move(agent_id)), toolbox_(toolbox), tasks_(tasks),
      bindings_(std::move(bindings)) {}

a2a::A2AMessage ToolBackedAgent::handle(const a2a::A2AMessage& request) {
    const std::string capability = request.body.value("capability", "");
    const json parameters = request.body.value("parameters", json::object());

    tasks::Task task = tasks_.create_task(capability.empty() ? "unknown" : capability,
                                          parameters);
    tasks_.transition_task(task.task_id, tasks::TaskState::in_progress);

    // the response answers the caller's task when the request names one,
    // otherwise it reports the task this hop created
    const std::string task_ref = request.header.task_id.value_or(task.task_id);
    const tasks::RetryPolicy no_retry{1, 1};

    auto respond_failed = [&](const TaskError& error, const json& details) {
        tasks_.fail_task(task.task_id, error, no_retry);
        json body = json{{"error", to_json(error)}};
        if (!details.empty()) body["details"] = details;
        a2a::A2AMessage response = a2a::make_message(
            agent_id_, request.header.sender_agent_id, body, {}, task_ref);
        response.header.status = a2a::status::failed;
        return response;
    };

    auto binding = bindings_.find(capability);
    if (binding == bindings_.end()) {
        return respond_failed(TaskError{errc::fn_not_found,
                                        agent_id_ + " does not provide capability \"" +
                                            capability + "\"",
                                        false},
                              json::object());
    }

    mcp::ToolCallOutcome outcome = toolbox_.call_function(
        binding->second.tool_id, binding->second.function, parameters);
    if (!outcome.ok()) {
        return respond_failed(*outcome.error, outcome.details);
    }

    tasks::Artifact artifact;
    artifact.artifact_id = uuid4();
    artifact.kind = tasks::ArtifactKind::structured_data;
    artifact.content = outcome.result->value;
    tasks_.complete_task(task.task_id, {artifact});

    a2a::A2AMessage response = a2a::make_message(
        agent_id_, request.header.sender_agent_id,
        json{{"result", outcome.result->value}}, {}, task_ref);
    response.header.status = a2a::status::processed;
    return response;
}

namespace {

StockRecord record_or_throw(const StockFixture& fixture, const json& params) {
    const std::string symbol = params.value("symbol", "");
    auto record = fixture.get(symbol);
    if (!record) {
        throw std::runtime_error("no fixture data for symbol " + symbol);
    }
    return *record;
}

json stock_result(const StockRecord& record) {
    return json{
        {"symbol", record.symbol},
        {"price", record.price},
        {"change", record.change},
        {"change_percent", record.change_percent},
        {"volume", record.volume},
    };
}

json news_result(const StockRecord& record) {
    json headlines = json::array();
    for (const Headline& item : record.news) {
        headlines.push_back(json{{"headline", item.headline},
                                 {"date", item.date},
                                 {"sentiment", item.sentiment}});
    }
    return json{{"symbol", record.symbol}, {"headlines", headlines}};
}

json company_result(const StockRecord& record) {
    return json{
        {"symbol", record.symbol},
        {"name", record.company.name},
        {"sector", record.company.sector},
        {"summary", record.company.summary},
    };
}

json financials_result(const StockRecord& record) {
    return json{
        {"symbol", record.symbol},
        {"revenue", record.financials.revenue},
        {"operating_income", record.financials.operating_income},
        {"net_income", record.financials.net_income},
        {"fiscal_year", record.financials.fiscal_year},
    };
}

} // namespace

json build_analysis(const json& params) {
    const json stock = params.value("stock", json::object());
    const json news = params.value("news", json::object());
    const json financials = params.value("financials", json::object());

    double change_percent = stock.value("change_percent", 0.0);
    double revenue = financials.value("revenue", 0.0);
    double net_income = financials.value("net_income", 0.0);
    double operating_income = financials.value("operating_income", 0.0);

    json strengths = json::array();
    json weaknesses = json::array();
    if (stock.contains("change_percent")) {
        if (change_percent > 0) strengths.push_back("positive price change");
        if (change_percent < 0) weaknesses.push_back("negative price change");
    }
    if (financials.contains("operating_income")) {
        if (operating_income > 0) strengths.push_back("positive operating income");
        if (operating_income < 0) weaknesses.push_back("negative operating income");
    }

    json opportunities = json::array();
    json threats = json::array();
    for (const json& item : news.value("headlines", json::array())) {
        const std::string sentiment = item.value("sentiment", "neutral");
        if (sentiment == "positive") opportunities.push_back(item.value("headline", ""));
        if (sentiment == "negative") threats.push_back(item.value("headline", ""));
    }

    double net_income_margin = revenue != 0.0 ? 100.0 * net_income / revenue : 0.0;
    double score = change_percent + net_income_margin;
    std::string verdict = score > 0 ? "favorable" : (score < 0 ? "unfavorable" : "neutral");

    return json{
        {"symbol", params.value("symbol", "")},
        {"strengths", strengths},
        {"weaknesses", weaknesses},
        {"opportunities", opportunities},
        {"threats", threats},
        {"verdict", verdict},
    };
}

void register_fixture_tools(mcp::Toolbox& toolbox, const std::string& tool_dir,
                            std::shared_ptr<const StockFixture> fixture) {
    std::map<std::string, std::map<std::string, mcp::FunctionHandler>> handler_sets;
    handler_sets["stock_data"] = {
        {"get_stock_price",
         [fixture](const json& params, mcp::SessionAccess&) {
             return stock_result(record_or_throw(*fixture, params));
         }},
    };
    handler_sets["web_scraper"] = {
        {"get_news",
         [fixture](const json& params, mcp::SessionAccess&) {
             return news_result(record_or_throw(*fixture, params));
         }},
    };
    handler_sets["financial_data"] = {
        {"get_company_info",
         [fixture](const json& params, mcp::SessionAccess&) {
             return company_result(record_or_throw(*fixture, params));
         }},
        {"get_financials",
         [fixture](const json& params, mcp::SessionAccess&) {
             return financials_result(record_or_throw(*fixture, params));
         }},
    };
    handler_sets["analysis_engine"] = {
        {"generate_analysis",
         [](const json& params, mcp::SessionAccess&) { return build_analysis(params); }},
    };

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(tool_dir)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw ConfigError("no tool descriptions in " + tool_dir);
    }

    for (const auto& path : files) {
        std::ifstream in(path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        mcp::ToolDescription description = mcp::parse_tool_description(buffer.str());
        auto handlers = handler_sets.find(description.tool_id);
        if (handlers == handler_sets.end()) {
            throw ConfigError("no fixture handlers for tool " + description.tool_id);
        }
        toolbox.register_tool(description, handlers->second);
    }
}

} // namespace agentmesh::demo
