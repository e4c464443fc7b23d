#pragma once

#include "agentmesh/common/errors.hpp"
#include "agentmesh/common/json.hpp"

#include <string>
#include <vector>

namespace agentmesh::service {

struct ServiceConfig {
    std::string bind_address = "127.0.0.1:8080"; // host:port, port 0 = ephemeral
    std::vector<std::string> auth_tokens;
    bool allow_anonymous = false;
    std::string card_dir;
    std::string tool_dir;
    std::string fixture_path;
    std::string alias_path;
    std::string log_path;       // request log, empty = stderr
    std::string event_log_path; // task event log, empty = off

    std::string host() const;
    int port() const;
};

// Throws ConfigError on missing/invalid fields (no tokens without the
// explicit allow_anonymous flag, unparseable bind_address, missing paths).
ServiceConfig service_config_from_json(const json& value);
ServiceConfig load_service_config(const std::string& path);

} // namespace agentmesh::service
