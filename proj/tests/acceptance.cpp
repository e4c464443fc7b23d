// Acceptance suite: one criterion per line, PASS or FAIL, exit status equal
// to the number of failed criteria. Each criterion re-derives its expected
// values independently (oracles, exhaustive enumeration, fixed-seed
// generators) instead of trusting the code under test.
//
// Special mode: `acceptance --emit-canonical [count] [seed]` prints the
// canonical wire form of generated messages and exits; the round-trip
// criterion executes itself twice in this mode to prove canonical emission
// is byte-stable across separate processes.
#include <httplib.h>

#include "agentmesh/a2a/card.hpp"
#include "agentmesh/a2a/message.hpp"
#include "agentmesh/demo/host.hpp"
#include "agentmesh/demo/orchestrator.hpp"
#include "agentmesh/mcp/schema.hpp"
#include "agentmesh/mcp/toolbox.hpp"
#include "agentmesh/service/client.hpp"
#include "agentmesh/service/http_service.hpp"
#include "agentmesh/tasks/store.hpp"
#include "agentmesh/workflow/engine.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace agentmesh;

// Returns "" when the criterion holds, otherwise a short failure note.
using CriterionFn = std::function<std::string()>;

#define EXPECT(cond, note)                                                                     \
    do {                                                                                       \
        if (!(cond)) return std::string(note);                                                 \
    } while (0)

namespace {

std::string self_path() {
    std::error_code ec;
    auto path = std::filesystem::read_symlink("/proc/self/exe", ec);
    return ec ? std::string() : path.string();
}

// Runs a command, captures stdout. Returns {exit_ok, output}.
std::pair<bool, std::string> run_capture(const std::string& command) {
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) return {false, ""};
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), n);
    }
    int status = ::pclose(pipe);
    return {status == 0, output};
}

void emit_canonical(int count, unsigned int seed) {
    std::mt19937 rng(seed);
    for (int i = 0; i < count; ++i) {
        std::cout << a2a::message_to_wire(generators::message(rng)) << "\n";
    }
}

const std::string kCaseStudyQuery =
    "Please provide the recent stock price, news, and investment perspective analysis for "
    "Samsung Electronics.";

demo::RuntimePaths runtime_paths() {
    demo::RuntimePaths paths;
    paths.card_dir = testutil::testdata_path("cards");
    paths.tool_dir = testutil::testdata_path("tools");
    paths.fixture_path = testutil::testdata_path("fixtures/stocks.json");
    paths.alias_path = testutil::testdata_path("fixtures/aliases.json");
    return paths;
}

service::ServiceConfig service_config() {
    service::ServiceConfig config;
    config.bind_address = "127.0.0.1:0";
    config.auth_tokens = {"acceptance-token"};
    config.card_dir = testutil::testdata_path("cards");
    config.tool_dir = testutil::testdata_path("tools");
    config.fixture_path = testutil::testdata_path("fixtures/stocks.json");
    config.alias_path = testutil::testdata_path("fixtures/aliases.json");
    config.log_path = (std::filesystem::temp_directory_path() /
                       "agentmesh-acceptance-requests.log")
                          .string();
    return config;
}

// ---------------------------------------------------------------- 1 ------

std::string criterion_message_round_trip() {
    std::mt19937 rng(424242);
    for (int i = 0; i < 1000; ++i) {
        a2a::A2AMessage msg = generators::message(rng);
        std::string wire = a2a::message_to_wire(msg);
        a2a::A2AMessage parsed = a2a::message_from_wire(wire);
        EXPECT(parsed == msg, "round-trip changed message " + std::to_string(i));
        EXPECT(a2a::message_to_wire(parsed) == wire,
               "re-emission not stable for message " + std::to_string(i));
        EXPECT(wire == oracles::canonical_json(a2a::message_to_json(msg)),
               "wire form disagrees with canonical-JSON oracle at " + std::to_string(i));
        EXPECT(wire.find('\n') == std::string::npos,
               "wire form is not a single line at " + std::to_string(i));
    }

    const std::string exe = self_path();
    EXPECT(!exe.empty(), "cannot resolve own executable path");
    const std::string command = "\"" + exe + "\" --emit-canonical 200 9001";
    auto [ok_a, out_a] = run_capture(command);
    auto [ok_b, out_b] = run_capture(command);
    EXPECT(ok_a && ok_b, "self-invocation for cross-process emission failed");
    EXPECT(!out_a.empty(), "cross-process emission produced no output");
    EXPECT(out_a == out_b, "canonical emission differs between two process runs");
    return "";
}

// ---------------------------------------------------------------- 2 ------

std::string criterion_default_status() {
    const json base = json::parse(
        testutil::read_file(testutil::testdata_path("messages/samsung-query.json")));
    std::mt19937 rng(20250601);
    for (int i = 0; i < 100; ++i) {
        json mutated = base;
        mutated["header"].erase("status");
        // scramble unrelated fields so each fixture is genuinely different
        if (i % 2 == 0) mutated["header"]["message_id"] = generators::uuid_like(rng);
        if (i % 3 == 0) mutated["body"]["note"] = "variant " + std::to_string(i);
        if (i % 5 == 0) {
            mutated["parts"] = json::array(
                {json{{"kind", "text"}, {"content", "p" + std::to_string(i)}}});
        }
        a2a::ParseReport report;
        a2a::A2AMessage msg = a2a::message_from_wire(mutated.dump(), &report);
        EXPECT(msg.header.status == a2a::status::pending,
               "missing status did not default to pending on fixture " + std::to_string(i));
        EXPECT(report.defaulted_field("status"),
               "default was applied silently on fixture " + std::to_string(i));
    }
    return "";
}

// ---------------------------------------------------------------- 3 ------

std::string criterion_card_conformance() {
    const std::string text =
        testutil::read_file(testutil::testdata_path("cards/stock-price-agent.json"));
    a2a::AgentCard card = a2a::parse_agent_card(text);
    EXPECT(validate_agent_card(card).empty(), "shipped card fails validation");

    const std::string canonical = a2a::agent_card_to_wire(card);
    EXPECT(canonical == oracles::canonical_json(json::parse(text)),
           "canonical card bytes disagree with the oracle serializer");

    service::HttpService svc(service_config());
    int port = svc.start();
    httplib::Client http("127.0.0.1", port);
    http.set_bearer_token_auth("acceptance-token");
    auto result = http.Get("/agents/stock-price-agent/card");
    svc.stop();
    EXPECT(result && result->status == 200, "card endpoint did not answer 200");
    EXPECT(result->body == canonical, "HTTP card body is not byte-equal to canonical form");
    return "";
}

// ---------------------------------------------------------------- 4 ------

std::string criterion_discovery_oracle() {
    std::mt19937 rng(7);
    const std::vector<std::string> probes = {
        "get_stock_price", "get_news",      "get_company_info", "get_financials",
        "generate_analysis", "handle_user_query", "translate",  "summarize",
        "no_such_capability"};
    for (int round = 0; round < 50; ++round) {
        int count = 1 + static_cast<int>(rng() % 1000);
        std::vector<a2a::AgentCard> deck = generators::cards(rng, count);
        a2a::Registry registry;
        for (const a2a::AgentCard& card : deck) registry.register_agent(card);
        for (const std::string& capability : probes) {
            std::vector<a2a::AgentCard> got = registry.discover(capability);
            std::vector<a2a::AgentCard> want = oracles::discover_by_scan(deck, capability);
            EXPECT(got.size() == want.size(),
                   "discovery count mismatch on round " + std::to_string(round));
            for (std::size_t i = 0; i < got.size(); ++i) {
                EXPECT(a2a::agent_card_to_wire(got[i]) == a2a::agent_card_to_wire(want[i]),
                       "discovery order/content mismatch on round " + std::to_string(round));
            }
        }
    }
    return "";
}

// ---------------------------------------------------------------- 5 ------

std::string criterion_task_state_machine() {
    using tasks::TaskState;
    const TaskState all[] = {TaskState::created, TaskState::in_progress,
                             TaskState::completed, TaskState::failed};
    const std::set<std::pair<TaskState, TaskState>> declared_legal = {
        {TaskState::created, TaskState::in_progress},
        {TaskState::in_progress, TaskState::completed},
        {TaskState::in_progress, TaskState::failed},
        {TaskState::failed, TaskState::in_progress},
    };

    auto drive_to = [](tasks::TaskStore& store, TaskState target) {
        tasks::Task task = store.create_task("probe");
        if (target == TaskState::created) return task;
        task = store.transition_task(task.task_id, TaskState::in_progress);
        if (target == TaskState::in_progress) return task;
        return store.transition_task(task.task_id, target);
    };

    int accepted = 0;
    for (TaskState from : all) {
        for (TaskState to : all) {
            tasks::TaskStore store;
            tasks::Task task = drive_to(store, from);
            bool legal = declared_legal.count({from, to}) > 0;
            try {
                store.transition_task(task.task_id, to);
                EXPECT(legal, "undeclared transition accepted: " + tasks::to_string(from) +
                                  " -> " + tasks::to_string(to));
                ++accepted;
            } catch (const TaskOpError& e) {
                EXPECT(!legal, "declared transition rejected: " + tasks::to_string(from) +
                                   " -> " + tasks::to_string(to));
                EXPECT(e.code() == "ILLEGAL_TRANSITION",
                       "illegal transition raised wrong code " + e.code());
                auto after = store.get_task(task.task_id);
                EXPECT(after && after->state == from && after->attempts == task.attempts,
                       "rejected transition mutated the task");
            }
        }
    }
    EXPECT(accepted == 4, "legal transition count is not 4");

    // geometric retry: policy {3, 100} waits 100, 200, 400, then terminal
    tasks::TaskStore store;
    tasks::Task task = store.create_task("flaky");
    store.transition_task(task.task_id, tasks::TaskState::in_progress);
    const TaskError timeout{"EXEC_FAILED", "downstream timeout", true};
    const tasks::RetryPolicy policy{3, 100};
    const std::int64_t expected_delays[] = {100, 200, 400};
    for (int attempt = 0; attempt < 3; ++attempt) {
        tasks::FailOutcome outcome = store.fail_task(task.task_id, timeout, policy);
        EXPECT(outcome.retry_delay_ms.has_value(),
               "retryable failure " + std::to_string(attempt) + " scheduled no retry");
        EXPECT(*outcome.retry_delay_ms == expected_delays[attempt],
               "retry delay " + std::to_string(attempt) + " is " +
                   std::to_string(*outcome.retry_delay_ms));
        EXPECT(outcome.task.state == tasks::TaskState::in_progress,
               "retry did not re-enter in_progress");
        EXPECT(outcome.task.attempts == attempt + 1, "attempts not incremented on retry");
    }
    tasks::FailOutcome terminal = store.fail_task(task.task_id, timeout, policy);
    EXPECT(!terminal.retry_delay_ms.has_value(), "retry scheduled past max_attempts");
    EXPECT(terminal.task.state == tasks::TaskState::failed, "exhausted task not failed");
    EXPECT(terminal.task.error.has_value() && terminal.task.error->code == "EXEC_FAILED",
           "terminal failure lost its error");

    // non-retryable errors are terminal immediately
    tasks::Task hard = store.create_task("hard");
    store.transition_task(hard.task_id, tasks::TaskState::in_progress);
    tasks::FailOutcome once =
        store.fail_task(hard.task_id, TaskError{"EXEC_FAILED", "fatal", false}, policy);
    EXPECT(!once.retry_delay_ms.has_value() && once.task.state == tasks::TaskState::failed,
           "non-retryable failure was retried");
    return "";
}

// ---------------------------------------------------------------- 6 ------

std::string criterion_schema_validator() {
    std::mt19937 rng(1863);
    int conforming = 0;
    for (int i = 0; i < 10000; ++i) {
        json doc = generators::schema_doc(rng, 0);
        json value = generators::value_for_schema(rng, doc, 0);
        bool strict = (i % 2) == 1;
        mcp::SchemaNode schema = mcp::parse_schema(doc);
        bool lib = mcp::conforms(schema, value, mcp::ValidateOptions{strict});
        bool oracle = oracles::schema_conforms(doc, value, strict);
        if (lib != oracle) {
            return "verdict mismatch on case " + std::to_string(i) + ": library " +
                   (lib ? "accepts" : "rejects") + ", oracle " +
                   (oracle ? "accepts" : "rejects");
        }
        conforming += lib ? 1 : 0;
    }
    EXPECT(conforming > 1000 && conforming < 9900,
           "degenerate case mix: " + std::to_string(conforming) + "/10000 conforming");

    // exhaustive error precedence through the call pipeline
    json probe_doc = json::parse(R"({
        "tool_id": "probe", "name": "Probe", "description": "precedence probe",
        "version": "1.0.0",
        "functions": [
            {"name": "echo", "description": "returns its input",
             "params_schema": {"type": "object",
                               "properties": {"text": {"type": "string"}},
                               "required": ["text"]},
             "returns_schema": {"type": "object",
                                "properties": {"text": {"type": "string"}},
                                "required": ["text"]}},
            {"name": "crash", "description": "always throws",
             "params_schema": {"type": "object", "properties": {}},
             "returns_schema": {"type": "object", "properties": {}}},
            {"name": "lie", "description": "breaks its returns schema",
             "params_schema": {"type": "object", "properties": {}},
             "returns_schema": {"type": "object",
                                "properties": {"text": {"type": "string"}},
                                "required": ["text"]}}
        ]})");
    mcp::Toolbox box;
    box.register_tool(
        mcp::tool_description_from_json(probe_doc),
        {{"echo", [](const json& params, mcp::SessionAccess&) {
              return json{{"text", params.at("text")}};
          }},
         {"crash", [](const json&, mcp::SessionAccess&) -> json {
              throw std::runtime_error("handler exploded");
          }},
         {"lie", [](const json&, mcp::SessionAccess&) { return json{{"nope", 1}}; }}});

    auto code_of = [&box](const std::string& tool, const std::string& fn, const json& params,
                          std::optional<std::string> session = std::nullopt) {
        mcp::ToolCallOutcome outcome = box.call_function(tool, fn, params, session);
        return outcome.ok() ? std::string("OK") : outcome.error->code;
    };

    EXPECT(code_of("ghost", "echo", json{{"text", "x"}}) == "TOOL_NOT_FOUND",
           "unknown tool did not win precedence");
    EXPECT(code_of("probe", "ghost", json::object()) == "FN_NOT_FOUND",
           "unknown function did not outrank bad params");
    EXPECT(code_of("probe", "echo", json::object()) == "PARAM_INVALID",
           "missing required param not reported");
    EXPECT(code_of("probe", "echo", json::object(), std::string("no-session")) ==
               "PARAM_INVALID",
           "param validation must precede session lookup");
    EXPECT(code_of("probe", "echo", json{{"text", "x"}}, std::string("no-session")) ==
               "UNKNOWN_SESSION",
           "unknown session not reported after valid params");
    EXPECT(code_of("probe", "crash", json::object()) == "EXEC_FAILED",
           "handler exception not mapped to EXEC_FAILED");
    EXPECT(code_of("probe", "lie", json::object()) == "EXEC_FAILED",
           "returns-schema break not mapped to EXEC_FAILED");
    mcp::ToolCallOutcome lie = box.call_function("probe", "lie", json::object());
    EXPECT(!lie.ok() && lie.details.value("stage", "") == "RESULT_SCHEMA",
           "result-schema failure lacks the RESULT_SCHEMA stage marker");
    mcp::ToolCallOutcome ok = box.call_function("probe", "echo", json{{"text", "x"}});
    EXPECT(ok.ok() && ok.result->value == json({{"text", "x"}}), "happy path failed");
    return "";
}

// ---------------------------------------------------------------- 7 ------

std::string criterion_workflow_engine() {
    std::mt19937 rng(31415);
    for (int round = 0; round < 60; ++round) {
        generators::GraphSpec spec = generators::graph_spec(rng);
        workflow::WorkflowGraph graph = generators::build_graph(spec);
        auto run_once = [&]() {
            bool aborted = false;
            workflow::WorkflowState state;
            workflow::ExecutionTrace trace;
            try {
                workflow::RunResult result = workflow::run_workflow(graph, {}, 200);
                state = std::move(result.state);
                trace = std::move(result.trace);
            } catch (const workflow::WorkflowError& e) {
                aborted = true;
                trace = e.trace();
            }
            return std::tuple<bool, workflow::WorkflowState, workflow::ExecutionTrace>(
                aborted, std::move(state), std::move(trace));
        };
        auto [aborted_a, state_a, trace_a] = run_once();
        EXPECT(generators::trace_is_valid_path(spec, workflow::trace_path(trace_a), aborted_a),
               "trace is not a valid path on round " + std::to_string(round));
        EXPECT(trace_a.steps.size() <= 200, "budget overrun on round " + std::to_string(round));

        auto [aborted_b, state_b, trace_b] = run_once();
        EXPECT(aborted_a == aborted_b &&
                   workflow::trace_path(trace_a) == workflow::trace_path(trace_b) &&
                   state_a.data_slots == state_b.data_slots,
               "replay diverged on round " + std::to_string(round));
    }

    // a two-node cycle runs exactly `budget` steps before aborting
    for (int budget : {1, 2, 10, 17}) {
        workflow::WorkflowGraph cycle;
        cycle.add_node("a", [](workflow::WorkflowState s) { return s; });
        cycle.add_node("b", [](workflow::WorkflowState s) { return s; });
        cycle.add_edge("a", "b");
        cycle.add_edge("b", "a");
        cycle.set_entry("a");
        try {
            workflow::run_workflow(cycle, {}, budget);
            return "cyclic graph terminated under budget " + std::to_string(budget);
        } catch (const workflow::WorkflowError& e) {
            EXPECT(e.code() == "BUDGET_EXCEEDED",
                   "cycle abort code is " + e.code() + " at budget " + std::to_string(budget));
            EXPECT(e.trace().steps.size() == static_cast<std::size_t>(budget),
                   "cycle ran " + std::to_string(e.trace().steps.size()) + " steps at budget " +
                       std::to_string(budget));
        }
    }
    return "";
}

// ---------------------------------------------------------------- 8 ------

std::string criterion_case_study() {
    demo::Runtime runtime(runtime_paths());
    demo::Orchestrator::QueryOutcome outcome =
        runtime.orchestrator().run_query(kCaseStudyQuery);

    // (a) node visit order: parser, planner, four data nodes, analysis,
    // response — with the planner re-entered between work nodes
    const std::vector<std::pair<std::string, std::string>> expected_path = {
        {"parse_request", "plain"},       {"plan_tasks", "get_stock_data"},
        {"get_stock_data", "plain"},      {"plan_tasks", "get_news_data"},
        {"get_news_data", "plain"},       {"plan_tasks", "get_company_info"},
        {"get_company_info", "plain"},    {"plan_tasks", "get_financial_data"},
        {"get_financial_data", "plain"},  {"plan_tasks", "analyze_data"},
        {"analyze_data", "plain"},        {"plan_tasks", "generate_response"},
        {"generate_response", ""},
    };
    EXPECT(workflow::trace_path(outcome.trace) == expected_path,
           "trace does not visit the case-study nodes in order");

    // (b) all five content sections (errors trails, and must be empty)
    std::vector<std::string> names;
    for (const json& section : outcome.document.at("sections")) {
        names.push_back(section.at("name").get<std::string>());
    }
    const std::vector<std::string> expected_names = {"price",      "news",     "company",
                                                     "financials", "analysis", "errors"};
    EXPECT(names == expected_names, "response sections are incomplete or misordered");
    EXPECT(outcome.document["sections"].back()["content"].empty(),
           "case-study run reported errors");

    // (c) one completed task per agent hop
    std::map<std::string, int> hops;
    for (const tasks::Task& task : runtime.task_store().all_tasks()) {
        EXPECT(task.state == tasks::TaskState::completed,
               "task " + task.task_type + " is not completed");
        hops[task.task_type] += 1;
    }
    const std::map<std::string, int> expected_hops = {{"generate_analysis", 1},
                                                      {"get_company_info", 1},
                                                      {"get_financials", 1},
                                                      {"get_news", 1},
                                                      {"get_stock_price", 1}};
    EXPECT(hops == expected_hops, "task store does not hold one completed task per hop");

    // (d) byte-identical response on re-run after normalization
    demo::Runtime second(runtime_paths());
    demo::Orchestrator::QueryOutcome repeat = second.orchestrator().run_query(kCaseStudyQuery);
    EXPECT(oracles::canonical_json(demo::normalize_for_comparison(outcome.document)) ==
               oracles::canonical_json(demo::normalize_for_comparison(repeat.document)),
           "normalized responses differ between runs");
    return "";
}

// ---------------------------------------------------------------- 9 ------

std::string criterion_transport_equivalence() {
    const std::vector<std::string> queries = {
        kCaseStudyQuery,
        "What is the price of AAPL?",
        "latest news about apple",
        "company overview of microsoft",
        "financial statement for samsung",
        "full analysis of MSFT",
        "outlook for apple inc",
        "investment perspective on samsung electronics",
        "price and news for 005930.KS",
        "status of microsoft",
        "AAPL financial statement and company overview",
        "stock price of samsung electronics",
        "news and financial statement for microsoft",
        "give me the price of apple and microsoft",
        "overview: apple",
        "what is the outlook on AAPL these days",
        "price of Contoso?",
        "tell me a joke",
        "삼성전자 주가 알려줘",
        "news about Narnia Ventures",
    };

    service::HttpService svc(service_config());
    int port = svc.start();
    std::string failure;
    {
        service::HttpClient client("http://127.0.0.1:" + std::to_string(port),
                                   "acceptance-token");
        for (std::size_t i = 0; i < queries.size() && failure.empty(); ++i) {
            a2a::A2AMessage request = a2a::make_message("user", "orchestrator-agent",
                                                        json{{"query", queries[i]}});
            a2a::A2AMessage via_http = client.send(request);
            a2a::A2AMessage in_process = svc.runtime().host().send(request);
            json a = demo::normalize_for_comparison(a2a::message_to_json(via_http));
            json b = demo::normalize_for_comparison(a2a::message_to_json(in_process));
            if (oracles::canonical_json(a) != oracles::canonical_json(b)) {
                failure = "transports disagree on query " + std::to_string(i);
            }
        }

        // every endpoint rejects anonymous requests
        if (failure.empty()) {
            httplib::Client bare("127.0.0.1", port);
            const std::vector<std::pair<std::string, std::string>> routes = {
                {"GET", "/agents"},
                {"GET", "/agents/stock-price-agent/card"},
                {"GET", "/registry/agents"},
                {"GET", "/mcp/tools"},
                {"GET", "/mcp/tools/stock_data"},
                {"GET", "/tasks"},
                {"GET", "/tasks/any"},
                {"GET", "/openapi.json"},
                {"POST", "/a2a/messages"},
                {"POST", "/mcp/tools/stock_data/call/get_stock_price"},
            };
            for (const auto& [method, path] : routes) {
                auto result = method == "GET" ? bare.Get(path)
                                              : bare.Post(path, "{}", "application/json");
                if (!result || result->status != 401 ||
                    json::parse(result->body).value("code", "") != "AUTH_FAILED") {
                    failure = "unauthenticated " + method + " " + path + " was not a 401";
                    break;
                }
            }
        }
    }
    svc.stop();
    return failure;
}

// ---------------------------------------------------------------- 10 -----

std::string criterion_error_path() {
    demo::Runtime runtime(runtime_paths());
    demo::Orchestrator::QueryOutcome outcome =
        runtime.orchestrator().run_query("What is the price of Contoso Industries?");

    std::vector<std::pair<std::string, std::string>> path =
        workflow::trace_path(outcome.trace);
    EXPECT(!path.empty() && path.back().first == "handle_error",
           "unknown-ticker query did not terminate in handle_error");
    EXPECT(outcome.document.value("summary", "") == "request failed: UNPARSEABLE_REQUEST",
           "error summary is not stable");
    const json& sections = outcome.document.at("sections");
    EXPECT(sections.size() == 1 && sections[0]["name"] == "errors",
           "error response is not errors-only");
    EXPECT(sections[0]["content"].size() == 1 &&
               sections[0]["content"][0]["code"] == "UNPARSEABLE_REQUEST",
           "error section lacks the stable UNPARSEABLE_REQUEST code");
    return "";
}

struct Criterion {
    int number;
    std::string name;
    CriterionFn run;
};

} // namespace

int main(int argc, char** argv) {
    if (argc >= 2 && std::string(argv[1]) == "--emit-canonical") {
        int count = argc >= 3 ? std::atoi(argv[2]) : 200;
        unsigned int seed = argc >= 4 ? static_cast<unsigned int>(std::atoll(argv[3])) : 9001;
        emit_canonical(count, seed);
        return 0;
    }

    const std::vector<Criterion> criteria = {
        {1, "message round-trip and byte-stable canonical emission",
         criterion_message_round_trip},
        {2, "missing status defaults to pending on mutated fixtures", criterion_default_status},
        {3, "shipped agent card validates and is served byte-equal", criterion_card_conformance},
        {4, "discovery matches the linear-scan oracle on randomized registries",
         criterion_discovery_oracle},
        {5, "task transition matrix is exact and retry backoff is geometric",
         criterion_task_state_machine},
        {6, "schema verdicts match the brute-force oracle; call errors keep precedence",
         criterion_schema_validator},
        {7, "workflow traces are valid paths; budgets are exact; replay is deterministic",
         criterion_workflow_engine},
        {8, "case-study query yields ordered trace, five sections, tasks, stable re-run",
         criterion_case_study},
        {9, "HTTP and in-process transports agree; endpoints demand auth",
         criterion_transport_equivalence},
        {10, "unknown-ticker query returns an errors-only response with a stable code",
         criterion_error_path},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string note;
        try {
            note = criterion.run();
        } catch (const std::exception& e) {
            note = std::string("unexpected exception: ") + e.what();
        }
        if (note.empty()) {
            std::cout << "PASS  " << criterion.number << ". " << criterion.name << "\n";
        } else {
            std::cout << "FAIL  " << criterion.number << ". " << criterion.name << " — "
                      << note << "\n";
            ++failures;
        }
    }
    std::cout << (10 - failures) << "/10 acceptance criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
