#pragma once

#include "agentmesh/a2a/message.hpp"
#include "agentmesh/common/errors.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace agentmesh::service {

// Network-level failure (connect refused, timeout, ...).
class TransportError : public ProtocolError {
public:
    explicit TransportError(const std::string& message)
        : ProtocolError("TRANSPORT_ERROR", message) {}
};

// The far side answered with a structured error body.
class RemoteError : public ProtocolError {
public:
    RemoteError(std::string code, const std::string& message, int http_status = 0,
                json details = json::object())
        : ProtocolError(std::move(code), message), http_status_(http_status),
          details_(std::move(details)) {}

    int http_status() const noexcept { return http_status_; }
    const json& details() const noexcept { return details_; }

private:
    int http_status_;
    json details_;
};

// Anything that can carry an A2A request to its recipient and return the
// response: the in-process host below, or an HTTP client.
class TransportPort {
public:
    virtual ~TransportPort() = default;
    virtual a2a::A2AMessage send(const a2a::A2AMessage& request) = 0;
};

struct MessagePair {
    a2a::A2AMessage request;
    a2a::A2AMessage response;
};

// In-process message bus: agent handlers keyed by agent_id, dispatch with
// the same request/response semantics the HTTP endpoint wraps. Every
// exchange is retained for post-run inspection.
class AgentHost : public TransportPort {
public:
    using AgentHandler = std::function<a2a::A2AMessage(const a2a::A2AMessage&)>;

    void register_handler(const std::string& agent_id, AgentHandler handler);

    // Validates the request, routes to the recipient's handler, logs the
    // pair. Throws SchemaError on an invalid message and
    // RemoteError(UNKNOWN_AGENT) when no handler owns the recipient id.
    a2a::A2AMessage send(const a2a::A2AMessage& request) override;

    std::vector<MessagePair> exchange_log() const;
    void clear_exchange_log();

private:
    mutable std::mutex mutex_;
    std::map<std::string, AgentHandler> handlers_;
    std::vector<MessagePair> log_;
};

} // namespace agentmesh::service
