#include "agentmesh/demo/host.hpp"

#include "agentmesh/common/ids.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace agentmesh::demo {

namespace {

constexpr const char* orchestrator_agent_id = "orchestrator-agent";

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

Runtime::Runtime(const RuntimePaths& paths) {
    fixture_ = std::make_shared<const StockFixture>(StockFixture::load(paths.fixture_path));
    aliases_ = std::make_shared<const TickerAliasTable>(TickerAliasTable::load(paths.alias_path));
    tasks_ = std::make_unique<tasks::TaskStore>(paths.event_log_path);

    std::vector<std::filesystem::path> card_files;
    for (const auto& entry : std::filesystem::directory_iterator(paths.card_dir)) {
        if (entry.path().extension() == ".json") card_files.push_back(entry.path());
    }
    std::sort(card_files.begin(), card_files.end());
    if (card_files.empty()) {
        throw ConfigError("no agent cards in " + paths.card_dir);
    }
    for (const auto& path : card_files) {
        registry_.register_agent(a2a::parse_agent_card(read_file(path)));
    }

    register_fixture_tools(toolbox_, paths.tool_dir, fixture_);

    // one specialist per case-study tool function
    const struct {
        const char* agent_id;
        const char* capability;
        const char* tool_id;
        const char* function;
    } specialists[] = {
        {"stock-price-agent", "get_stock_price", "stock_data", "get_stock_price"},
        {"news-agent", "get_news", "web_scraper", "get_news"},
        {"company-info-agent", "get_company_info", "financial_data", "get_company_info"},
        {"financial-info-agent", "get_financials", "financial_data", "get_financials"},
        {"analysis-agent", "generate_analysis", "analysis_engine", "generate_analysis"},
    };
    for (const auto& spec : specialists) {
        auto agent = std::make_unique<ToolBackedAgent>(
            spec.agent_id, toolbox_, *tasks_,
            std::map<std::string, CapabilityBinding>{
                {spec.capability, CapabilityBinding{spec.tool_id, spec.function}}});
        ToolBackedAgent* raw = agent.get();
        host_.register_handler(spec.agent_id,
                               [raw](const a2a::A2AMessage& msg) { return raw->handle(msg); });
        agents_.push_back(std::move(agent));
    }

    orchestrator_ = std::make_unique<Orchestrator>(orchestrator_agent_id, host_,
                                                   fixture_, aliases_);
    Orchestrator* orch = orchestrator_.get();
    tasks::TaskStore* task_store = tasks_.get();
    host_.register_handler(
        orchestrator_agent_id, [orch, task_store](const a2a::A2AMessage& request) {
            const std::string query = request.body.value("query", "");
            int budget = workflow::default_step_budget;
            if (request.body.contains("budget") && request.body["budget"].is_number_integer()) {
                budget = request.body["budget"].get<int>();
            }
            tasks::Task task = task_store->create_task("handle_user_query",
                                                       json{{"query", query}});
            task_store->transition_task(task.task_id, tasks::TaskState::in_progress);
            const std::string task_ref = request.header.task_id.value_or(task.task_id);
            try {
                Orchestrator::QueryOutcome outcome = orch->run_query(query, budget);
                tasks::Artifact artifact;
                artifact.artifact_id = uuid4();
                artifact.kind = tasks::ArtifactKind::structured_data;
                artifact.content = outcome.document;
                task_store->complete_task(task.task_id, {artifact});
                a2a::A2AMessage response = a2a::make_message(
                    orch->agent_id(), request.header.sender_agent_id,
                    json{{"document", outcome.document}}, {}, task_ref);
                response.header.status = a2a::status::processed;
                return response;
            } catch (const std::exception& e) {
                TaskError error{errc::exec_failed, e.what(), false};
                task_store->fail_task(task.task_id, error, tasks::RetryPolicy{1, 1});
                a2a::A2AMessage response = a2a::make_message(
                    orch->agent_id(), request.header.sender_agent_id,
                    json{{"error", to_json(error)}}, {}, task_ref);
                response.header.status = a2a::status::failed;
                return response;
            }
        });
}

a2a::A2AMessage Runtime::ask(const std::string& query, const std::string& user_id) {
    a2a::A2AMessage request = a2a::make_message(user_id, orchestrator_id(),
                                                json{{"query", query}});
    return host_.send(request);
}

} // namespace agentmesh::demo
