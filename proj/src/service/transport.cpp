#include "agentmesh/service/transport.hpp"

namespace agentmesh::service {

void AgentHost::register_handler(const std::string& agent_id, AgentHandler handler) {
    std::lock_guard lock(mutex_);
    handlers_[agent_id] = std::move(handler);
}

a2a::A2AMessage AgentHost::send(const a2a::A2AMessage& request) {
    auto violations = a2a::validate_message(request);
    if (!violations.empty()) {
        throw SchemaError(violations.front().code, violations.front().detail);
    }

    AgentHandler handler;
    {
        std::lock_guard lock(mutex_);
        auto it = handlers_.find(request.header.recipient_agent_id);
        if (it == handlers_.end()) {
            throw RemoteError(errc::unknown_agent,
                              "no agent registered as " + request.header.recipient_agent_id);
        }
        handler = it->second;
    }

    a2a::A2AMessage response = handler(request);

    std::lock_guard lock(mutex_);
    log_.push_back(MessagePair{request, response});
    return response;
}

std::vector<MessagePair> AgentHost::exchange_log() const {
    std::lock_guard lock(mutex_);
    return log_;
}

void AgentHost::clear_exchange_log() {
    std::lock_guard lock(mutex_);
    log_.clear();
}

} // namespace agentmesh::service
