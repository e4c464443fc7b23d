#include "agentmesh/service/http_service.hpp"

#include "agentmesh/a2a/card.hpp"
#include "agentmesh/a2a/message.hpp"
#include "agentmesh/tasks/store.hpp"

#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <iostream>

namespace agentmesh::service {

namespace {

// Set when a request enters pre-routing, read by the logger; httplib runs
// both on the request's worker thread.
thread_local std::chrono::steady_clock::time_point request_started;

json error_body(const std::string& code, const std::string& message,
                json details = json::object()) {
    return json{{"code", code}, {"message", message}, {"details", std::move(details)}};
}

void send_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(canonical_dump(body), "application/json; charset=utf-8");
}

void send_error(httplib::Response& res, const std::string& code, const std::string& message,
                json details = json::object()) {
    send_json(res, http_status_for_code(code), error_body(code, message, std::move(details)));
}

// Runs a route body and converts thrown protocol errors into the shared
// {code, message, details} error shape with the mapped status.
template <typename Fn>
void guarded(httplib::Response& res, Fn&& fn) {
    try {
        fn();
    } catch (const RemoteError& e) {
        send_error(res, e.code(), e.what(), e.details());
    } catch (const ProtocolError& e) {
        send_error(res, e.code(), e.what());
    } catch (const std::exception& e) {
        send_error(res, "INTERNAL", e.what());
    }
}

json parse_body_or_throw(const std::string& body) {
    if (body.empty()) return json::object();
    json value = json::parse(body, nullptr, false);
    if (value.is_discarded()) {
        throw ParseError("request body is not valid JSON");
    }
    return value;
}

json openapi_operation(const std::string& summary) {
    return json{{"summary", summary},
                {"responses", {{"200", {{"description", "success"}}}}}};
}

// Static API description served as documentation; routing and auth do not
// consult it.
json build_openapi_document() {
    json paths = json::object();
    paths["/healthz"] = {{"get", openapi_operation("liveness probe, the only unauthenticated route")}};
    paths["/a2a/messages"] = {{"post", openapi_operation("deliver an agent-to-agent message, returns the response message")}};
    paths["/agents"] = {{"get", openapi_operation("all registered agent cards")}};
    paths["/agents/{agent_id}/card"] = {{"get", openapi_operation("one agent card in canonical JSON")}};
    paths["/registry/agents"] = {{"get", openapi_operation("agent cards filtered by ?capability=<name>")}};
    paths["/mcp/tools"] = {{"get", openapi_operation("all registered tool descriptions")}};
    paths["/mcp/tools/{tool_id}"] = {{"get", openapi_operation("one tool description")}};
    paths["/mcp/tools/{tool_id}/call/{function}"] =
        {{"post", openapi_operation("invoke a tool function with the JSON body as parameters")}};
    paths["/tasks"] = {{"get", openapi_operation("all task records")}};
    paths["/tasks/{task_id}"] = {{"get", openapi_operation("one task record")}};
    paths["/openapi.json"] = {{"get", openapi_operation("this document")}};
    return json{{"openapi", "3.0.3"},
                {"info", {{"title", "agentmesh"}, {"version", "1.0.0"}}},
                {"paths", paths},
                {"components",
                 {{"securitySchemes", {{"bearerAuth", {{"type", "http"}, {"scheme", "bearer"}}}}}}},
                {"security", json::array({json{{"bearerAuth", json::array()}}})}};
}

} // namespace

int http_status_for_code(const std::string& code) {
    if (code == "PARSE_ERROR" || code == "SCHEMA_ERROR" || code == errc::param_invalid ||
        code == errc::unparseable_request || code == "INVALID_CARD" || code == "INVALID_PARTY") {
        return 400;
    }
    if (code == errc::auth_failed) return 401;
    if (code == errc::unknown_task || code == errc::unknown_agent ||
        code == errc::unknown_session || code == errc::tool_not_found ||
        code == errc::fn_not_found) {
        return 404;
    }
    if (code == errc::illegal_transition || code == "CONFLICTING_EDGE" ||
        code == errc::duplicate_artifact) {
        return 409;
    }
    if (code == errc::exec_failed) return 502;
    return 500;
}

HttpService::HttpService(ServiceConfig config) : config_(std::move(config)) {
    demo::RuntimePaths paths;
    paths.card_dir = config_.card_dir;
    paths.tool_dir = config_.tool_dir;
    paths.fixture_path = config_.fixture_path;
    paths.alias_path = config_.alias_path;
    paths.event_log_path = config_.event_log_path;
    runtime_ = std::make_unique<demo::Runtime>(paths);

    if (!config_.log_path.empty()) {
        log_stream_.open(config_.log_path, std::ios::app);
        if (!log_stream_) {
            throw ConfigError("cannot open request log: " + config_.log_path);
        }
    }

    server_ = std::make_unique<httplib::Server>();
    install_routes();
}

HttpService::~HttpService() { stop(); }

void HttpService::write_log_line(const std::string& line) {
    std::lock_guard<std::mutex> lock(log_mutex_);
    if (log_stream_.is_open()) {
        log_stream_ << line << '\n';
        log_stream_.flush();
    } else {
        std::clog << line << '\n';
    }
}

void HttpService::install_routes() {
    httplib::Server& server = *server_;

    // Auth gate: every route except the health probe requires a configured
    // bearer token. Runs before routing so unknown paths are rejected too.
    server.set_pre_routing_handler(
        [this](const httplib::Request& req, httplib::Response& res) {
            request_started = std::chrono::steady_clock::now();
            if (req.path == "/healthz" || config_.allow_anonymous) {
                return httplib::Server::HandlerResponse::Unhandled;
            }
            const std::string header = req.get_header_value("Authorization");
            constexpr const char* prefix = "Bearer ";
            bool authorized = false;
            if (header.rfind(prefix, 0) == 0) {
                const std::string token = header.substr(std::string(prefix).size());
                authorized = std::find(config_.auth_tokens.begin(), config_.auth_tokens.end(),
                                       token) != config_.auth_tokens.end();
            }
            if (!authorized) {
                send_error(res, errc::auth_failed, "missing or invalid bearer token");
                return httplib::Server::HandlerResponse::Handled;
            }
            return httplib::Server::HandlerResponse::Unhandled;
        });

    // One structured line per request: method, path, status, duration.
    server.set_logger([this](const httplib::Request& req, const httplib::Response& res) {
        const auto elapsed = std::chrono::steady_clock::now() - request_started;
        const double duration_ms =
            std::chrono::duration<double, std::milli>(elapsed).count();
        write_log_line(canonical_dump(json{{"duration_ms", duration_ms},
                                           {"method", req.method},
                                           {"path", req.path},
                                           {"status", res.status}}));
    });

    server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
        send_json(res, 200, json{{"status", "ok"}});
    });

    server.Post("/a2a/messages", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            a2a::A2AMessage request = a2a::message_from_wire(req.body);
            a2a::A2AMessage response = runtime_->host().send(request);
            res.status = 200;
            res.set_content(a2a::message_to_wire(response), "application/json; charset=utf-8");
        });
    });

    server.Get("/agents", [this](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] {
            json cards = json::array();
            for (const a2a::AgentCard& card : runtime_->registry().all_cards()) {
                cards.push_back(a2a::agent_card_to_json(card));
            }
            send_json(res, 200, json{{"agents", cards}});
        });
    });

    // Card serving is byte-exact: the body is the canonical card text, not a
    // re-wrapped envelope.
    server.Get("/agents/:id/card", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const std::string& agent_id = req.path_params.at("id");
            std::optional<a2a::AgentCard> card = runtime_->registry().get_card(agent_id);
            if (!card) {
                send_error(res, errc::unknown_agent, "no agent card for " + agent_id);
                return;
            }
            res.status = 200;
            res.set_content(a2a::agent_card_to_wire(*card), "application/json; charset=utf-8");
        });
    });

    server.Get("/registry/agents", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            std::vector<a2a::AgentCard> matches =
                req.has_param("capability")
                    ? runtime_->registry().discover(req.get_param_value("capability"))
                    : runtime_->registry().all_cards();
            json cards = json::array();
            for (const a2a::AgentCard& card : matches) {
                cards.push_back(a2a::agent_card_to_json(card));
            }
            send_json(res, 200, json{{"agents", cards}});
        });
    });

    server.Get("/mcp/tools", [this](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] {
            json tools = json::array();
            for (const mcp::ToolDescription& tool : runtime_->toolbox().all_tools()) {
                tools.push_back(mcp::tool_description_to_json(tool));
            }
            send_json(res, 200, json{{"tools", tools}});
        });
    });

    server.Get("/mcp/tools/:id", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const std::string& tool_id = req.path_params.at("id");
            std::optional<mcp::ToolDescription> tool = runtime_->toolbox().get_tool(tool_id);
            if (!tool) {
                send_error(res, errc::tool_not_found, "no tool registered as " + tool_id);
                return;
            }
            send_json(res, 200, mcp::tool_description_to_json(*tool));
        });
    });

    server.Post("/mcp/tools/:id/call/:fn",
                [this](const httplib::Request& req, httplib::Response& res) {
                    guarded(res, [&] {
                        const json params = parse_body_or_throw(req.body);
                        std::optional<std::string> session_id;
                        if (req.has_param("session")) {
                            session_id = req.get_param_value("session");
                        }
                        mcp::ToolCallOutcome outcome = runtime_->toolbox().call_function(
                            req.path_params.at("id"), req.path_params.at("fn"), params,
                            session_id);
                        if (outcome.ok()) {
                            send_json(res, 200,
                                      json{{"duration_ms", outcome.result->duration_ms},
                                           {"function", outcome.result->function},
                                           {"value", outcome.result->value}});
                        } else {
                            send_json(res, http_status_for_code(outcome.error->code),
                                      error_body(outcome.error->code, outcome.error->message,
                                                 outcome.details));
                        }
                    });
                });

    server.Get("/tasks", [this](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] {
            json records = json::array();
            for (const tasks::Task& task : runtime_->task_store().all_tasks()) {
                records.push_back(tasks::to_json(task));
            }
            send_json(res, 200, json{{"tasks", records}});
        });
    });

    server.Get("/tasks/:id", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const std::string& task_id = req.path_params.at("id");
            std::optional<tasks::Task> task = runtime_->task_store().get_task(task_id);
            if (!task) {
                send_error(res, errc::unknown_task, "no task with id " + task_id);
                return;
            }
            send_json(res, 200, tasks::to_json(*task));
        });
    });

    server.Get("/openapi.json", [](const httplib::Request&, httplib::Response& res) {
        send_json(res, 200, build_openapi_document());
    });
}

int HttpService::start() {
    if (running_.load()) return port_;
    const std::string host = config_.host();
    const int requested = config_.port();
    if (requested == 0) {
        port_ = server_->bind_to_any_port(host);
        if (port_ < 0) {
            throw ConfigError("cannot bind " + config_.bind_address);
        }
    } else {
        if (!server_->bind_to_port(host, requested)) {
            throw ConfigError("cannot bind " + config_.bind_address);
        }
        port_ = requested;
    }
    serve_thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    running_ = true;
    return port_;
}

void HttpService::stop() {
    if (server_ && server_->is_running()) {
        server_->stop();
    }
    if (serve_thread_.joinable()) {
        serve_thread_.join();
    }
    running_ = false;
}

} // namespace agentmesh::service
