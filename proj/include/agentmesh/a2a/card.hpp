#pragma once

#include "agentmesh/a2a/message.hpp" // Violation
#include "agentmesh/common/errors.hpp"
#include "agentmesh/common/json.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace agentmesh::a2a {

bool is_schema_type_name(const std::string& name);

struct Capability {
    std::string name;
    std::string description;
    std::map<std::string, std::string> parameters; // field -> schema type name
    std::map<std::string, std::string> returns;    // field -> schema type name
    // Extra string-valued keys found next to the structured fields are kept
    // here and re-emitted at the capability's top level so parse/emit round-trips.
    std::map<std::string, std::string> metadata;

    bool operator==(const Capability&) const = default;
};

enum class AuthScheme { none, bearer };

std::string to_string(AuthScheme scheme);
std::optional<AuthScheme> auth_scheme_from_string(const std::string& text);

struct AuthRequirement {
    AuthScheme scheme = AuthScheme::none;
    std::vector<std::string> scopes;

    bool operator==(const AuthRequirement&) const = default;
};

struct AgentCard {
    std::string agent_id;
    std::string name;
    std::string description;
    std::string version; // MAJOR.MINOR.PATCH
    std::vector<Capability> capabilities;
    AuthRequirement auth;
    std::map<std::string, std::string> metadata;

    bool operator==(const AgentCard&) const = default;
};

bool is_semver(const std::string& version);

// Throws ParseError on malformed JSON, SchemaError on invariant breaks
// (missing agent_id/name/capabilities, bad version, unknown type names).
AgentCard parse_agent_card(const std::string& text);
AgentCard agent_card_from_json(const json& value);

// Emission mirrors parsing: auth/metadata only appear when they carry
// information, so a minimal card round-trips to its own canonical text.
json agent_card_to_json(const AgentCard& card);
std::string agent_card_to_wire(const AgentCard& card);

// Every invariant violation on an already-constructed card; empty = valid.
ValidationReport validate_agent_card(const AgentCard& card);

// Shared mutable store of agent cards keyed by agent_id. Reads copy under
// the lock so callers never observe a torn card.
class Registry {
public:
    // Returns the registration timestamp (ISO-8601 UTC, non-decreasing across
    // calls). Re-registering an agent_id replaces the previous card.
    // Throws SchemaError(INVALID_CARD) when the card fails validation.
    std::string register_agent(const AgentCard& card);

    std::optional<AgentCard> get_card(const std::string& agent_id) const;

    // Exactly the cards advertising a capability with this name, ordered by
    // agent_id ascending.
    std::vector<AgentCard> discover(const std::string& capability_name) const;

    bool deregister(const std::string& agent_id);

    std::vector<AgentCard> all_cards() const; // agent_id ascending
    std::size_t size() const;

private:
    struct Entry {
        AgentCard card;
        std::string registered_at;
    };

    mutable std::mutex mutex_;
    std::map<std::string, Entry> entries_;
    std::int64_t last_registration_s_ = 0;
};

} // namespace agentmesh::a2a
