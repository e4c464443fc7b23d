#pragma once

#include "agentmesh/common/json.hpp"
#include "agentmesh/service/transport.hpp"

#include <memory>
#include <string>

namespace httplib {
class Client;
}

namespace agentmesh::service {

// Remote counterpart of AgentHost: the same send() contract, carried over
// HTTP with bearer auth. Network failures surface as TransportError,
// structured error bodies as RemoteError with the remote code.
class HttpClient : public TransportPort {
public:
    explicit HttpClient(const std::string& base_url, std::string token = "");
    ~HttpClient() override;

    HttpClient(const HttpClient&) = delete;
    HttpClient& operator=(const HttpClient&) = delete;

    // POSTs the canonical wire form to /a2a/messages and parses the
    // response message.
    a2a::A2AMessage send(const a2a::A2AMessage& request) override;

    // Raw JSON calls for the inspection endpoints.
    json get_json(const std::string& path);
    json post_json(const std::string& path, const json& body);

    const std::string& base_url() const { return base_url_; }

private:
    std::string request_body(const std::string& method, const std::string& path,
                             const std::string& body);

    std::string base_url_;
    std::unique_ptr<httplib::Client> http_;
};

} // namespace agentmesh::service
