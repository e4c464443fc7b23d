#include "agentmesh/service/config.hpp"

#include <fstream>
#include <sstream>

namespace agentmesh::service {

std::string ServiceConfig::host() const {
    auto colon = bind_address.rfind(':');
    return colon == std::string::npos ? bind_address : bind_address.substr(0, colon);
}

int ServiceConfig::port() const {
    auto colon = bind_address.rfind(':');
    if (colon == std::string::npos || colon + 1 >= bind_address.size()) return -1;
    try {
        return std::stoi(bind_address.substr(colon + 1));
    } catch (const std::exception&) {
        return -1;
    }
}

ServiceConfig service_config_from_json(const json& value) {
    if (!value.is_object()) {
        throw ConfigError("service config must be a JSON object");
    }
    ServiceConfig config;
    config.bind_address = value.value("bind_address", config.bind_address);
    config.allow_anonymous = value.value("allow_anonymous", false);
    for (const json& token : value.value("auth_tokens", json::array())) {
        if (!token.is_string() || token.get<std::string>().empty()) {
            throw ConfigError("auth_tokens entries must be non-empty strings");
        }
        config.auth_tokens.push_back(token.get<std::string>());
    }
    config.card_dir = value.value("card_dir", "");
    config.tool_dir = value.value("tool_dir", "");
    config.fixture_path = value.value("fixture_path", "");
    config.alias_path = value.value("alias_path", "");
    config.log_path = value.value("log_path", "");
    config.event_log_path = value.value("event_log_path", "");

    if (config.auth_tokens.empty() && !config.allow_anonymous) {
        throw ConfigError("auth_tokens must be non-empty unless allow_anonymous is set");
    }
    if (config.host().empty() || config.port() < 0 || config.port() > 65535) {
        throw ConfigError("bind_address must be host:port, got " + config.bind_address);
    }
    if (config.card_dir.empty()) throw ConfigError("service config requires card_dir");
    if (config.tool_dir.empty()) throw ConfigError("service config requires tool_dir");
    if (config.fixture_path.empty()) throw ConfigError("service config requires fixture_path");
    if (config.alias_path.empty()) throw ConfigError("service config requires alias_path");
    return config;
}

ServiceConfig load_service_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config file not found: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json value = json::parse(buffer.str(), nullptr, false);
    if (value.is_discarded()) {
        throw ConfigError("config file is not valid JSON: " + path);
    }
    return service_config_from_json(value);
}

} // namespace agentmesh::service
