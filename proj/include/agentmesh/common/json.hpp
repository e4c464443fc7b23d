#pragma once

#include <json.hpp>

#include <string>

namespace agentmesh {

using json = nlohmann::json;

// Canonical wire form: single line, object keys sorted lexicographically,
// UTF-8 preserved unescaped. nlohmann's default json type keeps object
// members in a sorted std::map, so a plain compact dump is canonical as
// long as every emitter goes through this helper.
inline std::string canonical_dump(const json& value) {
    return value.dump();
}

} // namespace agentmesh
