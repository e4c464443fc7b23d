#include "agentmesh/service/client.hpp"

#include "agentmesh/a2a/message.hpp"

#include <httplib.h>

namespace agentmesh::service {

namespace {

// Re-raises a structured error body as RemoteError; bodies that are not
// the shared error shape still carry their HTTP status.
[[noreturn]] void throw_remote_error(int status, const std::string& body) {
    json parsed = json::parse(body, nullptr, false);
    if (parsed.is_object() && parsed.contains("code") && parsed["code"].is_string()) {
        throw RemoteError(parsed["code"].get<std::string>(),
                          parsed.value("message", std::string{}), status,
                          parsed.value("details", json::object()));
    }
    throw RemoteError("HTTP_" + std::to_string(status), "unexpected response body", status,
                      json{{"body", body}});
}

json parse_response_json(const std::string& body) {
    json value = json::parse(body, nullptr, false);
    if (value.is_discarded()) {
        throw TransportError("response body is not valid JSON");
    }
    return value;
}

} // namespace

HttpClient::HttpClient(const std::string& base_url, std::string token)
    : base_url_(base_url), http_(std::make_unique<httplib::Client>(base_url)) {
    http_->set_connection_timeout(5, 0);
    http_->set_read_timeout(30, 0);
    if (!token.empty()) {
        http_->set_bearer_token_auth(token);
    }
}

HttpClient::~HttpClient() = default;

std::string HttpClient::request_body(const std::string& method, const std::string& path,
                                     const std::string& body) {
    httplib::Result result =
        method == "GET" ? http_->Get(path)
                        : http_->Post(path, body, "application/json; charset=utf-8");
    if (!result) {
        throw TransportError("no response from " + base_url_ + path + ": " +
                             httplib::to_string(result.error()));
    }
    if (result->status >= 400) {
        throw_remote_error(result->status, result->body);
    }
    return result->body;
}

a2a::A2AMessage HttpClient::send(const a2a::A2AMessage& request) {
    const std::string body =
        request_body("POST", "/a2a/messages", a2a::message_to_wire(request));
    return a2a::message_from_wire(body);
}

json HttpClient::get_json(const std::string& path) {
    return parse_response_json(request_body("GET", path, ""));
}

json HttpClient::post_json(const std::string& path, const json& body) {
    return parse_response_json(request_body("POST", path, canonical_dump(body)));
}

} // namespace agentmesh::service
