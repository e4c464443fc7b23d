#include "agentmesh/a2a/card.hpp"

#include "agentmesh/common/ids.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace agentmesh::a2a {

bool is_schema_type_name(const std::string& name) {
    return name == "string" || name == "number" || name == "integer" ||
           name == "boolean" || name == "object" || name == "array";
}

std::string to_string(AuthScheme scheme) {
    switch (scheme) {
    case AuthScheme::none: return "none";
    case AuthScheme::bearer: return "bearer";
    }
    return "none";
}

std::optional<AuthScheme> auth_scheme_from_string(const std::string& text) {
    if (text == "none") return AuthScheme::none;
    if (text == "bearer") return AuthScheme::bearer;
    return std::nullopt;
}

bool is_semver(const std::string& version) {
    // MAJOR.MINOR.PATCH, digits only
    std::size_t pos = 0;
    for (int block = 0; block < 3; ++block) {
        std::size_t digits = 0;
        while (pos < version.size() && std::isdigit(static_cast<unsigned char>(version[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) return false;
        if (block < 2) {
            if (pos >= version.size() || version[pos] != '.') return false;
            ++pos;
        }
    }
    return pos == version.size();
}

namespace {

std::map<std::string, std::string> typed_field_map(const json& value, const std::string& where) {
    if (!value.is_object()) {
        throw SchemaError(where + " must be a JSON object");
    }
    std::map<std::string, std::string> fields;
    for (const auto& [key, entry] : value.items()) {
        if (!entry.is_string() || !is_schema_type_name(entry.get<std::string>())) {
            throw SchemaError(where + "." + key + ": unknown schema type name");
        }
        fields[key] = entry.get<std::string>();
    }
    return fields;
}

Capability capability_from_json(const json& value) {
    if (!value.is_object()) {
        throw SchemaError("capability must be a JSON object");
    }
    Capability cap;
    cap.name = value.value("name", "");
    if (cap.name.empty()) {
        throw SchemaError("capability requires a non-empty name");
    }
    cap.description = value.value("description", "");
    if (value.contains("parameters")) {
        cap.parameters = typed_field_map(value.at("parameters"), "parameters");
    }
    if (value.contains("returns")) {
        cap.returns = typed_field_map(value.at("returns"), "returns");
    }
    for (const auto& [key, entry] : value.items()) {
        if (key == "name" || key == "description" || key == "parameters" || key == "returns") {
            continue;
        }
        if (!entry.is_string()) {
            throw SchemaError("capability." + key + ": extra fields must be strings");
        }
        cap.metadata[key] = entry.get<std::string>();
    }
    return cap;
}

json capability_to_json(const Capability& cap) {
    json value = json{
        {"name", cap.name},
        {"description", cap.description},
        {"parameters", json(cap.parameters)},
        {"returns", json(cap.returns)},
    };
    for (const auto& [key, entry] : cap.metadata) value[key] = entry;
    return value;
}

std::map<std::string, std::string> string_map(const json& value, const std::string& where) {
    if (!value.is_object()) {
        throw SchemaError(where + " must be a JSON object");
    }
    std::map<std::string, std::string> result;
    for (const auto& [key, entry] : value.items()) {
        if (!entry.is_string()) {
            throw SchemaError(where + "." + key + " must be a string");
        }
        result[key] = entry.get<std::string>();
    }
    return result;
}

} // namespace

AgentCard agent_card_from_json(const json& value) {
    if (!value.is_object()) {
        throw SchemaError("agent card must be a JSON object");
    }
    AgentCard card;
    card.agent_id = value.value("agent_id", "");
    card.name = value.value("name", "");
    card.description = value.value("description", "");
    card.version = value.value("version", "");

    if (value.contains("capabilities")) {
        const json& caps = value.at("capabilities");
        if (!caps.is_array()) {
            throw SchemaError("capabilities must be a JSON array");
        }
        for (const json& entry : caps) card.capabilities.push_back(capability_from_json(entry));
    }

    if (value.contains("auth")) {
        const json& auth = value.at("auth");
        if (!auth.is_object()) {
            throw SchemaError("auth must be a JSON object");
        }
        auto scheme = auth_scheme_from_string(auth.value("scheme", "none"));
        if (!scheme) {
            throw SchemaError("unknown auth scheme: " + auth.value("scheme", ""));
        }
        card.auth.scheme = *scheme;
        if (auth.contains("scopes")) {
            for (const json& scope : auth.at("scopes")) {
                if (!scope.is_string()) throw SchemaError("auth scopes must be strings");
                card.auth.scopes.push_back(scope.get<std::string>());
            }
        }
    }

    if (value.contains("metadata")) {
        card.metadata = string_map(value.at("metadata"), "metadata");
    }

    ValidationReport violations = validate_agent_card(card);
    if (!violations.empty()) {
        throw SchemaError("INVALID_CARD", violations.front().code + ": " + violations.front().detail);
    }
    return card;
}

AgentCard parse_agent_card(const std::string& text) {
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) {
        throw ParseError("agent card is not valid JSON");
    }
    return agent_card_from_json(value);
}

json agent_card_to_json(const AgentCard& card) {
    json caps = json::array();
    for (const Capability& cap : card.capabilities) caps.push_back(capability_to_json(cap));
    json value = json{
        {"agent_id", card.agent_id},
        {"name", card.name},
        {"description", card.description},
        {"version", card.version},
        {"capabilities", caps},
    };
    if (card.auth.scheme != AuthScheme::none || !card.auth.scopes.empty()) {
        value["auth"] = json{{"scheme", to_string(card.auth.scheme)},
                             {"scopes", json(card.auth.scopes)}};
    }
    if (!card.metadata.empty()) {
        value["metadata"] = json(card.metadata);
    }
    return value;
}

std::string agent_card_to_wire(const AgentCard& card) {
    return canonical_dump(agent_card_to_json(card));
}

ValidationReport validate_agent_card(const AgentCard& card) {
    ValidationReport report;
    if (card.agent_id.empty()) {
        report.push_back({"EMPTY_AGENT_ID", "agent_id is empty"});
    }
    if (card.name.empty()) {
        report.push_back({"EMPTY_NAME", "name is empty"});
    }
    if (!is_semver(card.version)) {
        report.push_back({"BAD_VERSION", "version is not MAJOR.MINOR.PATCH: " + card.version});
    }
    if (card.capabilities.empty()) {
        report.push_back({"NO_CAPABILITIES", "card advertises no capabilities"});
    }
    std::set<std::string> seen;
    for (const Capability& cap : card.capabilities) {
        if (cap.name.empty()) {
            report.push_back({"EMPTY_CAPABILITY_NAME", "capability with empty name"});
            continue;
        }
        if (!seen.insert(cap.name).second) {
            report.push_back({"DUPLICATE_CAPABILITY", "capability repeated: " + cap.name});
        }
        for (const auto& [field, type] : cap.parameters) {
            if (!is_schema_type_name(type)) {
                report.push_back({"BAD_TYPE_NAME", cap.name + ".parameters." + field + ": " + type});
            }
        }
        for (const auto& [field, type] : cap.returns) {
            if (!is_schema_type_name(type)) {
                report.push_back({"BAD_TYPE_NAME", cap.name + ".returns." + field + ": " + type});
            }
        }
    }
    if (card.auth.scheme == AuthScheme::none && !card.auth.scopes.empty()) {
        report.push_back({"AUTH_SCOPES_WITHOUT_SCHEME", "scheme none must have no scopes"});
    }
    return report;
}

std::string Registry::register_agent(const AgentCard& card) {
    ValidationReport violations = validate_agent_card(card);
    if (!violations.empty()) {
        throw SchemaError("INVALID_CARD", violations.front().code + ": " + violations.front().detail);
    }
    std::lock_guard lock(mutex_);
    std::int64_t now_s = std::max(unix_now_seconds(), last_registration_s_);
    last_registration_s_ = now_s;
    std::string registered_at = to_utc_iso8601(now_s);
    entries_[card.agent_id] = Entry{card, registered_at};
    return registered_at;
}

std::optional<AgentCard> Registry::get_card(const std::string& agent_id) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(agent_id);
    if (it == entries_.end()) return std::nullopt;
    return it->second.card;
}

std::vector<AgentCard> Registry::discover(const std::string& capability_name) const {
    std::lock_guard lock(mutex_);
    std::vector<AgentCard> result;
    for (const auto& [agent_id, entry] : entries_) { // map iteration = agent_id ascending
        for (const Capability& cap : entry.card.capabilities) {
            if (cap.name == capability_name) {
                result.push_back(entry.card);
                break;
            }
        }
    }
    return result;
}

bool Registry::deregister(const std::string& agent_id) {
    std::lock_guard lock(mutex_);
    return entries_.erase(agent_id) > 0;
}

std::vector<AgentCard> Registry::all_cards() const {
    std::lock_guard lock(mutex_);
    std::vector<AgentCard> result;
    result.reserve(entries_.size());
    for (const auto& [agent_id, entry] : entries_) result.push_back(entry.card);
    return result;
}

std::size_t Registry::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

} // namespace agentmesh::a2a
