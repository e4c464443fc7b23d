#include "generators.hpp"

#include <algorithm>
#include <cstdio>

namespace generators {

namespace {

const std::vector<std::string> kWords = {
    "alpha", "beta",  "gamma",   "delta", "market", "quote",
    "news",  "agent", "삼성전자", "données", "task",  "graph"};

const std::vector<std::string> kCapabilityPool = {
    "get_stock_price", "get_news",  "get_company_info", "get_financials",
    "generate_analysis", "translate", "summarize",        "fetch_page"};

const std::vector<std::string> kTypeNames = {"string", "number",  "integer",
                                             "boolean", "object", "array"};

const std::vector<std::string> kPropertyNames = {"a", "b", "c", "name", "value", "count"};

// Short decimal literals whose shortest round-trip text is unambiguous.
const std::vector<double> kDoubles = {0.5, -2.25, 1.0, -1.0, 71400.0, 0.75, -0.83, 12.5};

std::string pick(std::mt19937& rng, const std::vector<std::string>& pool) {
    return pool[static_cast<std::size_t>(below(rng, static_cast<int>(pool.size())))];
}

} // namespace

int below(std::mt19937& rng, int bound) {
    return static_cast<int>(rng() % static_cast<unsigned>(bound));
}

bool chance(std::mt19937& rng, int percent) { return below(rng, 100) < percent; }

std::string identifier(std::mt19937& rng, int min_len, int max_len) {
    static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789-";
    const int length = min_len + below(rng, max_len - min_len + 1);
    std::string out;
    out += static_cast<char>('a' + below(rng, 26)); // never starts with digit/dash
    for (int i = 1; i < length; ++i) {
        out += alphabet[below(rng, static_cast<int>(sizeof alphabet) - 1)];
    }
    return out;
}

std::string uuid_like(std::mt19937& rng) {
    static const char hex[] = "0123456789abcdef";
    std::string out = "xxxxxxxx-xxxx-4xxx-yxxx-xxxxxxxxxxxx";
    for (char& c : out) {
        if (c == 'x') {
            c = hex[below(rng, 16)];
        } else if (c == 'y') {
            c = hex[8 + below(rng, 4)]; // variant nibble: 8, 9, a or b
        }
    }
    return out;
}

std::string timestamp(std::mt19937& rng) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                  2020 + below(rng, 10), 1 + below(rng, 12), 1 + below(rng, 28),
                  below(rng, 24), below(rng, 60), below(rng, 60));
    return buffer;
}

json scalar(std::mt19937& rng) {
    switch (below(rng, 5)) {
    case 0: return json(pick(rng, kWords));
    case 1: return json(below(rng, 2001) - 1000);
    case 2: return json(kDoubles[static_cast<std::size_t>(
        below(rng, static_cast<int>(kDoubles.size())))]);
    case 3: return json(chance(rng, 50));
    default: return json(nullptr);
    }
}

json value(std::mt19937& rng, int depth) {
    if (depth <= 0 || chance(rng, 50)) return scalar(rng);
    if (chance(rng, 50)) {
        json array = json::array();
        const int count = below(rng, 4);
        for (int i = 0; i < count; ++i) array.push_back(value(rng, depth - 1));
        return array;
    }
    json object = json::object();
    const int count = below(rng, 4);
    for (int i = 0; i < count; ++i) {
        object[pick(rng, kPropertyNames)] = value(rng, depth - 1);
    }
    return object;
}

agentmesh::a2a::A2AMessage message(std::mt19937& rng) {
    agentmesh::a2a::A2AMessage msg;
    msg.header.sender_agent_id = "s-" + identifier(rng);
    msg.header.recipient_agent_id = "r-" + identifier(rng);
    if (chance(rng, 50)) msg.header.task_id = uuid_like(rng);
    msg.header.message_id = uuid_like(rng);
    msg.header.timestamp = timestamp(rng);
    static const std::vector<std::string> statuses = {"pending", "delivered", "processed",
                                                      "failed"};
    msg.header.status = pick(rng, statuses);

    msg.body = json::object();
    const int members = below(rng, 4);
    for (int i = 0; i < members; ++i) {
        msg.body[pick(rng, kPropertyNames)] = value(rng, 2);
    }

    const int parts = below(rng, 4);
    for (int i = 0; i < parts; ++i) {
        std::map<std::string, std::string> metadata;
        if (chance(rng, 40)) metadata[pick(rng, kPropertyNames)] = pick(rng, kWords);
        if (chance(rng, 50)) {
            msg.parts.push_back(agentmesh::a2a::text_part(pick(rng, kWords), metadata));
        } else {
            json content = json::object();
            content[pick(rng, kPropertyNames)] = scalar(rng);
            msg.parts.push_back(agentmesh::a2a::data_part(content, metadata));
        }
    }
    return msg;
}

json schema_doc(std::mt19937& rng, int depth) {
    const int pick_bound = depth > 0 ? 6 : 4; // leaves stay primitive
    const std::string type = kTypeNames[static_cast<std::size_t>(below(rng, pick_bound))];
    json doc{{"type", type}};

    if (type == "object") {
        json properties = json::object();
        std::vector<std::string> names;
        const int count = below(rng, 4);
        for (int i = 0; i < count; ++i) {
            const std::string name = kPropertyNames[static_cast<std::size_t>(
                below(rng, static_cast<int>(kPropertyNames.size())))];
            if (properties.contains(name)) continue;
            properties[name] = schema_doc(rng, depth - 1);
            names.push_back(name);
        }
        if (!properties.empty()) doc["properties"] = properties;
        json required = json::array();
        for (const std::string& name : names) {
            if (chance(rng, 40)) required.push_back(name);
        }
        if (!required.empty()) doc["required"] = required;
    } else if (type == "array") {
        doc["items"] = schema_doc(rng, depth - 1);
    } else if (chance(rng, 30)) {
        json allowed = json::array();
        const int count = 1 + below(rng, 3);
        for (int i = 0; i < count; ++i) {
            if (type == "string") allowed.push_back(pick(rng, kWords));
            if (type == "number") {
                allowed.push_back(kDoubles[static_cast<std::size_t>(
                    below(rng, static_cast<int>(kDoubles.size())))]);
            }
            if (type == "integer") allowed.push_back(below(rng, 20) - 10);
            if (type == "boolean") allowed.push_back(chance(rng, 50));
        }
        doc["enum"] = allowed;
    }
    if (chance(rng, 20)) doc["description"] = pick(rng, kWords); // unknown keyword
    return doc;
}

json value_for_schema(std::mt19937& rng, const json& schema, int depth) {
    if (chance(rng, 30)) return value(rng, 2); // arbitrary value, mismatch likely

    const std::string type = schema.at("type").get<std::string>();
    if (schema.contains("enum") && chance(rng, 80)) {
        const json& allowed = schema["enum"];
        return allowed[static_cast<std::size_t>(
            below(rng, static_cast<int>(allowed.size())))];
    }
    if (type == "string") return json(pick(rng, kWords));
    if (type == "number") {
        return json(kDoubles[static_cast<std::size_t>(
            below(rng, static_cast<int>(kDoubles.size())))]);
    }
    if (type == "integer") return json(below(rng, 40) - 20);
    if (type == "boolean") return json(chance(rng, 50));
    if (type == "array") {
        json out = json::array();
        if (depth > 0) {
            const int count = below(rng, 3);
            for (int i = 0; i < count; ++i) {
                out.push_back(value_for_schema(rng, schema.at("items"), depth - 1));
            }
        }
        return out;
    }
    // object
    json out = json::object();
    const json properties = schema.value("properties", json::object());
    for (auto it = properties.begin(); it != properties.end(); ++it) {
        const bool required =
            schema.contains("required") &&
            std::find(schema["required"].begin(), schema["required"].end(), json(it.key())) !=
                schema["required"].end();
        if (required ? chance(rng, 90) : chance(rng, 60)) {
            out[it.key()] = value_for_schema(rng, it.value(), depth - 1);
        }
    }
    if (chance(rng, 25)) out["zz_extra"] = scalar(rng);
    return out;
}

std::vector<agentmesh::a2a::AgentCard> cards(std::mt19937& rng, int count) {
    std::vector<agentmesh::a2a::AgentCard> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        agentmesh::a2a::AgentCard card;
        char id[32];
        std::snprintf(id, sizeof id, "agent-%05d", i);
        card.agent_id = id;
        card.name = pick(rng, kWords) + " agent";
        card.description = pick(rng, kWords);
        card.version = std::to_string(1 + below(rng, 9)) + "." + std::to_string(below(rng, 10)) +
                       "." + std::to_string(below(rng, 10));
        std::vector<std::string> pool = kCapabilityPool;
        std::shuffle(pool.begin(), pool.end(), rng);
        const int capability_count = 1 + below(rng, 4);
        for (int c = 0; c < capability_count; ++c) {
            agentmesh::a2a::Capability capability;
            capability.name = pool[static_cast<std::size_t>(c)];
            capability.description = pick(rng, kWords);
            const int params = below(rng, 3);
            for (int p = 0; p < params; ++p) {
                capability.parameters[pick(rng, kPropertyNames)] = pick(rng, kTypeNames);
            }
            const int returns = below(rng, 3);
            for (int r = 0; r < returns; ++r) {
                capability.returns[pick(rng, kPropertyNames)] = pick(rng, kTypeNames);
            }
            card.capabilities.push_back(std::move(capability));
        }
        if (chance(rng, 25)) {
            card.auth.scheme = agentmesh::a2a::AuthScheme::bearer;
            const int scopes = below(rng, 3);
            for (int s = 0; s < scopes; ++s) card.auth.scopes.push_back(pick(rng, kWords));
        }
        out.push_back(std::move(card));
    }
    std::shuffle(out.begin(), out.end(), rng); // registration order is arbitrary
    return out;
}

GraphSpec graph_spec(std::mt19937& rng) {
    GraphSpec spec;
    const int node_count = 2 + below(rng, 7);
    for (int i = 0; i < node_count; ++i) spec.nodes.push_back("n" + std::to_string(i));
    spec.entry = spec.nodes[0];

    // every node gets an outgoing edge, so runs end at a terminal or on budget
    for (const std::string& node : spec.nodes) {
        if (chance(rng, 60)) {
            spec.plain_edges[node] =
                spec.nodes[static_cast<std::size_t>(below(rng, node_count))];
        } else {
            spec.conditional_edges[node] = {
                {"even", spec.nodes[static_cast<std::size_t>(below(rng, node_count))]},
                {"odd", spec.nodes[static_cast<std::size_t>(below(rng, node_count))]},
            };
        }
    }
    const int terminal_count = 1 + below(rng, node_count);
    for (int i = 0; i < terminal_count; ++i) {
        spec.terminals.insert(spec.nodes[static_cast<std::size_t>(below(rng, node_count))]);
    }
    return spec;
}

agentmesh::workflow::WorkflowGraph build_graph(const GraphSpec& spec) {
    using agentmesh::workflow::WorkflowState;
    agentmesh::workflow::WorkflowGraph graph;
    for (const std::string& node : spec.nodes) {
        graph.add_node(node, [node](WorkflowState state) {
            if (!state.data_slots.count("visits")) state.data_slots["visits"] = json::array();
            state.data_slots["visits"].push_back(node);
            return state;
        });
    }
    for (const auto& [from, to] : spec.plain_edges) {
        if (spec.terminals.count(from)) continue;
        graph.add_edge(from, to);
    }
    for (const auto& [from, mapping] : spec.conditional_edges) {
        if (spec.terminals.count(from)) continue;
        graph.add_conditional_edges(
            from,
            [](const WorkflowState& state) {
                const auto it = state.data_slots.find("visits");
                const std::size_t visits = it == state.data_slots.end() ? 0 : it->second.size();
                return visits % 2 == 0 ? std::string("even") : std::string("odd");
            },
            {{"even", mapping.at("even")}, {"odd", mapping.at("odd")}});
    }
    graph.set_entry(spec.entry);
    for (const std::string& node : spec.terminals) graph.add_terminal(node);
    return graph;
}

bool trace_is_valid_path(const GraphSpec& spec,
                         const std::vector<std::pair<std::string, std::string>>& path,
                         bool aborted) {
    if (path.empty() || path.front().first != spec.entry) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto& [node, label] = path[i];
        const bool last = i + 1 == path.size();
        if (label.empty()) {
            return spec.terminals.count(node) > 0 && last && !aborted;
        }
        std::string expected_next;
        if (label == "plain") {
            const auto it = spec.plain_edges.find(node);
            if (it == spec.plain_edges.end()) return false;
            expected_next = it->second;
        } else {
            const auto by_node = spec.conditional_edges.find(node);
            if (by_node == spec.conditional_edges.end()) return false;
            const auto by_label = by_node->second.find(label);
            if (by_label == by_node->second.end()) return false;
            expected_next = by_label->second;
        }
        if (!last && path[i + 1].first != expected_next) return false;
    }
    return aborted; // ran out of steps without reaching a terminal
}

} // namespace generators
