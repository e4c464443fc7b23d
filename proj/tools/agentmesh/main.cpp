// Operator entry point: run the HTTP service, send queries, inspect
// tasks/agents/tools over the API, and validate fixture files locally.
// Exit codes: 0 success, 1 validation/remote failure, 2 usage error,
// 3 transport failure.

#include "agentmesh/a2a/card.hpp"
#include "agentmesh/a2a/message.hpp"
#include "agentmesh/common/json.hpp"
#include "agentmesh/mcp/toolbox.hpp"
#include "agentmesh/service/client.hpp"
#include "agentmesh/service/config.hpp"
#include "agentmesh/service/http_service.hpp"
#include "agentmesh/workflow/engine.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

namespace {

using agentmesh::json;

std::atomic<bool> g_stop_requested{false};

void request_stop(int) { g_stop_requested.store(true); }

void print_document(const json& value, bool json_output) {
    if (json_output) {
        std::cout << agentmesh::canonical_dump(value) << "\n";
    } else {
        std::cout << value.dump(2) << "\n";
    }
}

void print_error_body(const std::string& code, const std::string& message,
                      const json& details = json::object()) {
    std::cerr << agentmesh::canonical_dump(
                     json{{"code", code}, {"message", message}, {"details", details}})
              << "\n";
}

std::string read_file_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw agentmesh::ConfigError("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int cmd_serve(const std::string& config_path, bool json_output) {
    agentmesh::service::HttpService service(
        agentmesh::service::load_service_config(config_path));
    const int port = service.start();
    const std::string address = "http://" + service.config().host() + ":" + std::to_string(port);
    if (json_output) {
        std::cout << agentmesh::canonical_dump(json{{"listening", address}}) << std::endl;
    } else {
        std::cout << "listening on " << address << std::endl;
    }
    std::signal(SIGINT, request_stop);
    std::signal(SIGTERM, request_stop);
    while (!g_stop_requested.load()) {
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
    service.stop();
    return 0;
}

int cmd_ask(const std::string& endpoint, const std::string& token, const std::string& query,
            std::optional<int> budget, bool json_output) {
    agentmesh::service::HttpClient client(endpoint, token);

    // Discover the coordinating agent instead of hard-coding its id.
    json found = client.get_json("/registry/agents?capability=handle_user_query");
    if (!found.contains("agents") || found["agents"].empty()) {
        print_error_body("UNKNOWN_AGENT", "no agent advertises handle_user_query");
        return 1;
    }
    const std::string orchestrator_id = found["agents"][0]["agent_id"].get<std::string>();

    json body{{"query", query}};
    if (budget) body["budget"] = *budget;
    agentmesh::a2a::A2AMessage response =
        client.send(agentmesh::a2a::make_message("cli-user", orchestrator_id, body));
    if (response.header.status == agentmesh::a2a::status::failed) {
        std::cerr << agentmesh::canonical_dump(response.body) << "\n";
        return 1;
    }
    print_document(response.body.value("document", json::object()), json_output);
    return 0;
}

int cmd_tasks(agentmesh::service::HttpClient& client, bool show, const std::string& id,
              bool json_output) {
    if (show) {
        print_document(client.get_json("/tasks/" + id), json_output);
        return 0;
    }
    json doc = client.get_json("/tasks");
    if (json_output) {
        print_document(doc, true);
        return 0;
    }
    for (const json& task : doc["tasks"]) {
        std::cout << task["task_id"].get<std::string>() << "  "
                  << task["state"].get<std::string>() << "  "
                  << task["task_type"].get<std::string>() << "  attempts="
                  << task["attempts"].get<int>() << "\n";
    }
    return 0;
}

int cmd_agents(agentmesh::service::HttpClient& client, bool show, const std::string& id,
               bool json_output) {
    if (show) {
        print_document(client.get_json("/agents/" + id + "/card"), json_output);
        return 0;
    }
    json doc = client.get_json("/agents");
    if (json_output) {
        print_document(doc, true);
        return 0;
    }
    for (const json& card : doc["agents"]) {
        std::cout << card["agent_id"].get<std::string>() << "  "
                  << card["name"].get<std::string>() << "  v"
                  << card["version"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_tools(agentmesh::service::HttpClient& client, bool show, const std::string& id,
              bool json_output) {
    if (show) {
        print_document(client.get_json("/mcp/tools/" + id), json_output);
        return 0;
    }
    json doc = client.get_json("/mcp/tools");
    if (json_output) {
        print_document(doc, true);
        return 0;
    }
    for (const json& tool : doc["tools"]) {
        std::cout << tool["tool_id"].get<std::string>() << "  "
                  << tool["name"].get<std::string>() << "  v"
                  << tool["version"].get<std::string>() << "  functions="
                  << tool["functions"].size() << "\n";
    }
    return 0;
}

// Parses the file as the requested kind and prints every violation.
// Exit 0 when the report is clean, 1 otherwise.
int cmd_validate(const std::string& kind, const std::string& path, bool json_output) {
    const std::string text = read_file_or_throw(path);
    json violations = json::array();
    try {
        if (kind == "card") {
            agentmesh::a2a::AgentCard card = agentmesh::a2a::parse_agent_card(text);
            for (const auto& violation : agentmesh::a2a::validate_agent_card(card)) {
                violations.push_back(to_json(violation));
            }
        } else if (kind == "tool") {
            agentmesh::mcp::parse_tool_description(text); // throws on any contract break
        } else { // message
            agentmesh::a2a::A2AMessage msg = agentmesh::a2a::message_from_wire(text);
            for (const auto& violation : agentmesh::a2a::validate_message(msg)) {
                violations.push_back(to_json(violation));
            }
        }
    } catch (const agentmesh::ProtocolError& e) {
        violations.push_back(json{{"code", e.code()}, {"detail", e.what()}});
    }

    const bool valid = violations.empty();
    if (json_output) {
        std::cout << agentmesh::canonical_dump(
                         json{{"valid", valid}, {"violations", violations}})
                  << "\n";
    } else if (valid) {
        std::cout << path << ": valid " << kind << "\n";
    } else {
        for (const json& violation : violations) {
            std::cout << violation["code"].get<std::string>() << "  "
                      << violation["detail"].get<std::string>() << "\n";
        }
    }
    return valid ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"agent interoperability runtime: HTTP service, remote client, validators"};
    app.require_subcommand(1);

    std::string endpoint = "http://127.0.0.1:8080";
    std::string token;
    bool json_output = false;
    app.add_option("--endpoint", endpoint, "service base URL")->capture_default_str();
    app.add_option("--token", token, "bearer token")->envname("AGENTMESH_TOKEN");
    app.add_flag("--json", json_output, "print a single JSON document instead of text");

    std::string config_path;
    CLI::App* serve = app.add_subcommand("serve", "run the HTTP service");
    serve->add_option("--config", config_path, "service config JSON file")->required();

    std::string query;
    int budget = agentmesh::workflow::default_step_budget;
    CLI::App* ask = app.add_subcommand("ask", "send a query to the orchestrator agent");
    ask->add_option("query", query, "natural-language request")->required();
    CLI::Option* budget_opt = ask->add_option("--budget", budget, "workflow step budget");

    std::string task_id;
    CLI::App* tasks_cmd = app.add_subcommand("tasks", "inspect task records");
    tasks_cmd->require_subcommand(1);
    tasks_cmd->add_subcommand("list", "all tasks");
    CLI::App* tasks_show = tasks_cmd->add_subcommand("show", "one task by id");
    tasks_show->add_option("id", task_id, "task id")->required();

    std::string agent_id;
    CLI::App* agents_cmd = app.add_subcommand("agents", "inspect registered agents");
    agents_cmd->require_subcommand(1);
    agents_cmd->add_subcommand("list", "all agent cards");
    CLI::App* agents_show = agents_cmd->add_subcommand("show", "one agent card by id");
    agents_show->add_option("id", agent_id, "agent id")->required();

    std::string tool_id;
    CLI::App* tools_cmd = app.add_subcommand("tools", "inspect registered tools");
    tools_cmd->require_subcommand(1);
    tools_cmd->add_subcommand("list", "all tool descriptions");
    CLI::App* tools_show = tools_cmd->add_subcommand("show", "one tool description by id");
    tools_show->add_option("id", tool_id, "tool id")->required();

    std::string validate_kind;
    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "validate a local JSON file");
    validate->add_option("kind", validate_kind, "card, tool or message")
        ->required()
        ->check(CLI::IsMember({"card", "tool", "message"}));
    validate->add_option("file", validate_path, "path to the JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (serve->parsed()) {
            return cmd_serve(config_path, json_output);
        }
        if (ask->parsed()) {
            std::optional<int> budget_arg;
            if (budget_opt->count() > 0) budget_arg = budget;
            return cmd_ask(endpoint, token, query, budget_arg, json_output);
        }
        if (validate->parsed()) {
            return cmd_validate(validate_kind, validate_path, json_output);
        }
        agentmesh::service::HttpClient client(endpoint, token);
        if (tasks_cmd->parsed()) {
            return cmd_tasks(client, tasks_show->parsed(), task_id, json_output);
        }
        if (agents_cmd->parsed()) {
            return cmd_agents(client, agents_show->parsed(), agent_id, json_output);
        }
        return cmd_tools(client, tools_show->parsed(), tool_id, json_output);
    } catch (const agentmesh::service::TransportError& e) {
        print_error_body(e.code(), e.what());
        return 3;
    } catch (const agentmesh::service::RemoteError& e) {
        print_error_body(e.code(), e.what(), e.details());
        return 1;
    } catch (const agentmesh::ProtocolError& e) {
        print_error_body(e.code(), e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error_body("INTERNAL", e.what());
        return 1;
    }
}
