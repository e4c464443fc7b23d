#include "agentmesh/mcp/schema.hpp"

#include <algorithm>

namespace agentmesh::mcp {

std::string to_string(SchemaType type) {
    switch (type) {
    case SchemaType::string_t: return "string";
    case SchemaType::number_t: return "number";
    case SchemaType::integer_t: return "integer";
    case SchemaType::boolean_t: return "boolean";
    case SchemaType::object_t: return "object";
    case SchemaType::array_t: return "array";
    }
    return "object";
}

std::optional<SchemaType> schema_type_from_string(const std::string& text) {
    if (text == "string") return SchemaType::string_t;
    if (text == "number") return SchemaType::number_t;
    if (text == "integer") return SchemaType::integer_t;
    if (text == "boolean") return SchemaType::boolean_t;
    if (text == "object") return SchemaType::object_t;
    if (text == "array") return SchemaType::array_t;
    return std::nullopt;
}

bool SchemaNode::operator==(const SchemaNode& other) const {
    if (type != other.type || properties != other.properties ||
        required != other.required || enum_values != other.enum_values ||
        extras != other.extras) {
        return false;
    }
    if (static_cast<bool>(items) != static_cast<bool>(other.items)) return false;
    return !items || *items == *other.items;
}

namespace {

bool value_matches_type(SchemaType type, const json& value) {
    switch (type) {
    case SchemaType::string_t: return value.is_string();
    case SchemaType::number_t: return value.is_number();
    case SchemaType::integer_t: return value.is_number_integer() || value.is_number_unsigned();
    case SchemaType::boolean_t: return value.is_boolean();
    case SchemaType::object_t: return value.is_object();
    case SchemaType::array_t: return value.is_array();
    }
    return false;
}

} // namespace

SchemaNode parse_schema(const json& value, std::vector<std::string>* warnings) {
    if (!value.is_object()) {
        throw SchemaError("schema must be a JSON object");
    }
    if (!value.contains("type") || !value.at("type").is_string()) {
        throw SchemaError("schema requires a string \"type\"");
    }
    auto type = schema_type_from_string(value.at("type").get<std::string>());
    if (!type) {
        throw SchemaError("unknown schema type: " + value.at("type").get<std::string>());
    }

    SchemaNode node;
    node.type = *type;

    if (value.contains("properties")) {
        if (*type != SchemaType::object_t) {
            throw SchemaError("\"properties\" only applies to object schemas");
        }
        if (!value.at("properties").is_object()) {
            throw SchemaError("\"properties\" must be a JSON object");
        }
        for (const auto& [key, sub] : value.at("properties").items()) {
            node.properties[key] = parse_schema(sub, warnings);
        }
    }

    if (value.contains("required")) {
        if (*type != SchemaType::object_t) {
            throw SchemaError("\"required\" only applies to object schemas");
        }
        if (!value.at("required").is_array()) {
            throw SchemaError("\"required\" must be a JSON array");
        }
        for (const json& entry : value.at("required")) {
            if (!entry.is_string()) {
                throw SchemaError("\"required\" entries must be strings");
            }
            const std::string name = entry.get<std::string>();
            if (!node.properties.count(name)) {
                throw SchemaError("required field not in properties: " + name);
            }
            node.required.push_back(name);
        }
    }

    if (*type == SchemaType::array_t) {
        if (!value.contains("items")) {
            throw SchemaError("array schema requires \"items\"");
        }
        node.items = std::make_shared<SchemaNode>(parse_schema(value.at("items"), warnings));
    } else if (value.contains("items")) {
        throw SchemaError("\"items\" only applies to array schemas");
    }

    if (value.contains("enum")) {
        if (!value.at("enum").is_array() || value.at("enum").empty()) {
            throw SchemaError("\"enum\" must be a non-empty JSON array");
        }
        for (const json& literal : value.at("enum")) {
            if (!value_matches_type(*type, literal)) {
                throw SchemaError("enum literal does not match schema type: " + literal.dump());
            }
            node.enum_values.push_back(literal);
        }
    }

    for (const auto& [key, entry] : value.items()) {
        if (key == "type" || key == "properties" || key == "required" ||
            key == "items" || key == "enum") {
            continue;
        }
        node.extras[key] = entry;
        if (warnings) warnings->push_back("ignored schema keyword: " + key);
    }

    return node;
}

json emit_schema(const SchemaNode& node) {
    json value = json{{"type", to_string(node.type)}};
    if (node.type == SchemaType::object_t) {
        json properties = json::object();
        for (const auto& [key, sub] : node.properties) properties[key] = emit_schema(sub);
        if (!properties.empty()) value["properties"] = properties;
        if (!node.required.empty()) value["required"] = json(node.required);
    }
    if (node.type == SchemaType::array_t && node.items) {
        value["items"] = emit_schema(*node.items);
    }
    if (!node.enum_values.empty()) value["enum"] = json(node.enum_values);
    for (const auto& [key, entry] : node.extras.items()) value[key] = entry;
    return value;
}

json to_json(const SchemaViolation& violation) {
    return json{
        {"path", violation.path},
        {"code", violation.code},
        {"detail", violation.detail},
        {"warning", violation.warning},
    };
}

namespace {

void validate_at(const SchemaNode& schema, const json& value, const std::string& path,
                 const ValidateOptions& options, std::vector<SchemaViolation>& out) {
    if (!value_matches_type(schema.type, value)) {
        out.push_back({path, "TYPE_MISMATCH",
                       "expected " + to_string(schema.type) + ", got " + std::string(value.type_name()),
                       false});
        return; // no point descending into or enum-checking a mistyped value
    }
    if (!schema.enum_values.empty()) {
        bool member = std::any_of(schema.enum_values.begin(), schema.enum_values.end(),
                                  [&](const json& literal) { return literal == value; });
        if (!member) {
            out.push_back({path, "ENUM_VIOLATION", "value not in enum: " + value.dump(), false});
        }
    }
    if (schema.type == SchemaType::object_t) {
        for (const std::string& name : schema.required) {
            if (!value.contains(name)) {
                out.push_back({path + "." + name, "MISSING_REQUIRED",
                               "required field absent", false});
            }
        }
        for (const auto& [key, sub] : schema.properties) {
            if (value.contains(key)) {
                validate_at(sub, value.at(key), path + "." + key, options, out);
            }
        }
        for (const auto& [key, entry] : value.items()) {
            (void)entry;
            if (!schema.properties.count(key)) {
                out.push_back({path + "." + key, "EXTRA_KEY", "field not in schema",
                               !options.strict_extra_keys});
            }
        }
    } else if (schema.type == SchemaType::array_t && schema.items) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            validate_at(*schema.items, value.at(i), path + "[" + std::to_string(i) + "]",
                        options, out);
        }
    }
}

} // namespace

std::vector<SchemaViolation> validate_value(const SchemaNode& schema, const json& value,
                                            const ValidateOptions& options) {
    std::vector<SchemaViolation> out;
    validate_at(schema, value, "$", options, out);
    return out;
}

bool conforms(const SchemaNode& schema, const json& value, const ValidateOptions& options) {
    auto violations = validate_value(schema, value, options);
    return std::none_of(violations.begin(), violations.end(),
                        [](const SchemaViolation& v) { return !v.warning; });
}

} // namespace agentmesh::mcp
