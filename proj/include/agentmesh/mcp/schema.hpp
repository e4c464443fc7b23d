#pragma once

#include "agentmesh/common/errors.hpp"
#include "agentmesh/common/json.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace agentmesh::mcp {

enum class SchemaType { string_t, number_t, integer_t, boolean_t, object_t, array_t };

std::string to_string(SchemaType type);
std::optional<SchemaType> schema_type_from_string(const std::string& text);

// JSON-Schema subset: six types, properties/required on objects, items on
// arrays, enum on anything. Unknown keywords are preserved in `extras` and
// re-emitted, but never interpreted.
struct SchemaNode {
    SchemaType type = SchemaType::object_t;
    std::map<std::string, SchemaNode> properties; // object only
    std::vector<std::string> required;            // object only, subset of properties
    std::shared_ptr<SchemaNode> items;            // array only
    std::vector<json> enum_values;                // optional, homogeneous with type
    json extras = json::object();

    bool operator==(const SchemaNode& other) const;
};

// Throws SchemaError on: unknown type keyword, required not a subset of
// properties, array without items / items off an array, enum values not
// matching the node type. Unknown keywords are collected as warnings.
SchemaNode parse_schema(const json& value, std::vector<std::string>* warnings = nullptr);

json emit_schema(const SchemaNode& node);

struct SchemaViolation {
    std::string path; // JSON path, e.g. $.symbol or $[2].name
    std::string code; // TYPE_MISMATCH, MISSING_REQUIRED, ENUM_VIOLATION, EXTRA_KEY
    std::string detail;
    bool warning = false;

    bool operator==(const SchemaViolation&) const = default;
};

json to_json(const SchemaViolation& violation);

struct ValidateOptions {
    bool strict_extra_keys = false; // promote EXTRA_KEY from warning to error
};

// Recursive-descent conformance check; extra keys on objects are warnings
// unless strict. Never throws.
std::vector<SchemaViolation> validate_value(const SchemaNode& schema, const json& value,
                                            const ValidateOptions& options = {});

// True when validate_value reports no non-warning violations.
bool conforms(const SchemaNode& schema, const json& value,
              const ValidateOptions& options = {});

} // namespace agentmesh::mcp
