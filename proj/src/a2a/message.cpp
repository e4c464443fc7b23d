#include "agentmesh/a2a/message.hpp"

#include "agentmesh/common/ids.hpp"

#include <algorithm>

namespace agentmesh::a2a {

bool is_known_status(const std::string& value) {
    return value == status::pending || value == status::delivered ||
           value == status::processed || value == status::failed;
}

MessagePart text_part(std::string text, std::map<std::string, std::string> metadata) {
    return MessagePart{part_kind::text, json(std::move(text)), std::move(metadata)};
}

MessagePart data_part(json content, std::map<std::string, std::string> metadata) {
    return MessagePart{part_kind::data, std::move(content), std::move(metadata)};
}

bool ParseReport::defaulted_field(const std::string& name) const {
    return std::find(defaulted.begin(), defaulted.end(), name) != defaulted.end();
}

json to_json(const Violation& violation) {
    return json{{"code", violation.code}, {"detail", violation.detail}};
}

A2AMessage make_message(const std::string& sender, const std::string& recipient,
                        json body, std::vector<MessagePart> parts,
                        std::optional<std::string> task_id) {
    if (sender.empty() || recipient.empty() || sender == recipient) {
        throw SchemaError("INVALID_PARTY",
                          "sender and recipient must be non-empty and distinct");
    }
    A2AMessage msg;
    msg.header.sender_agent_id = sender;
    msg.header.recipient_agent_id = recipient;
    msg.header.task_id = std::move(task_id);
    msg.header.message_id = uuid4();
    msg.header.timestamp = now_utc_iso8601();
    msg.header.status = status::pending;
    msg.body = std::move(body);
    msg.parts = std::move(parts);
    return msg;
}

namespace {

json part_to_json(const MessagePart& part) {
    json metadata = json::object();
    for (const auto& [key, value] : part.metadata) metadata[key] = value;
    return json{
        {"kind", part.kind},
        {"content", part.content},
        {"metadata", metadata},
    };
}

MessagePart part_from_json(const json& value) {
    if (!value.is_object()) {
        throw SchemaError("message part must be a JSON object");
    }
    MessagePart part;
    part.kind = value.value("kind", "");
    part.content = value.contains("content") ? value.at("content") : json();
    if (value.contains("metadata")) {
        const json& metadata = value.at("metadata");
        if (!metadata.is_object()) {
            throw SchemaError("part metadata must be a JSON object");
        }
        for (const auto& [key, entry] : metadata.items()) {
            if (!entry.is_string()) {
                throw SchemaError("part metadata values must be strings");
            }
            part.metadata[key] = entry.get<std::string>();
        }
    }
    return part;
}

} // namespace

json message_to_json(const A2AMessage& msg) {
    json header = json{
        {"sender_agent_id", msg.header.sender_agent_id},
        {"recipient_agent_id", msg.header.recipient_agent_id},
        {"message_id", msg.header.message_id},
        {"timestamp", msg.header.timestamp},
        {"status", msg.header.status},
    };
    if (msg.header.task_id) header["task_id"] = *msg.header.task_id;

    json parts = json::array();
    for (const auto& part : msg.parts) parts.push_back(part_to_json(part));

    // body and parts are always present on the wire, even when empty
    return json{
        {"header", header},
        {"body", msg.body.is_null() ? json::object() : msg.body},
        {"parts", parts},
    };
}

std::string message_to_wire(const A2AMessage& msg) {
    return canonical_dump(message_to_json(msg));
}

A2AMessage message_from_json(const json& value, ParseReport* report) {
    ParseReport scratch;
    ParseReport& notes = report ? *report : scratch;

    if (!value.is_object()) {
        throw SchemaError("message wire form must be a JSON object");
    }
    const json header = value.value("header", json::object());
    if (!header.is_object()) {
        throw SchemaError("message header must be a JSON object");
    }

    A2AMessage msg;
    msg.header.sender_agent_id = header.value("sender_agent_id", "");
    msg.header.recipient_agent_id = header.value("recipient_agent_id", "");
    if (msg.header.sender_agent_id.empty() || msg.header.recipient_agent_id.empty()) {
        throw SchemaError("message header requires sender_agent_id and recipient_agent_id");
    }

    if (header.contains("task_id") && !header.at("task_id").is_null()) {
        if (!header.at("task_id").is_string()) {
            throw SchemaError("task_id must be a string");
        }
        msg.header.task_id = header.at("task_id").get<std::string>();
    }

    if (header.contains("message_id") && header.at("message_id").is_string()) {
        msg.header.message_id = header.at("message_id").get<std::string>();
    } else {
        msg.header.message_id = uuid4();
        notes.defaulted.push_back("message_id");
    }

    if (header.contains("timestamp") && header.at("timestamp").is_string()) {
        // restored verbatim, even if oddly formatted; validation reports it
        msg.header.timestamp = header.at("timestamp").get<std::string>();
    } else {
        msg.header.timestamp = now_utc_iso8601();
        notes.defaulted.push_back("timestamp");
    }

    if (header.contains("status") && header.at("status").is_string()) {
        msg.header.status = header.at("status").get<std::string>();
    } else {
        msg.header.status = status::pending;
        notes.defaulted.push_back("status");
    }

    const json body = value.value("body", json::object());
    if (!body.is_object()) {
        throw SchemaError("message body must be a JSON object");
    }
    msg.body = body;

    const json parts = value.value("parts", json::array());
    if (!parts.is_array()) {
        throw SchemaError("message parts must be a JSON array");
    }
    for (const json& entry : parts) msg.parts.push_back(part_from_json(entry));

    return msg;
}

A2AMessage message_from_wire(const std::string& text, ParseReport* report) {
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) {
        throw ParseError("message wire form is not valid JSON");
    }
    return message_from_json(value, report);
}

ValidationReport validate_message(const A2AMessage& msg) {
    ValidationReport report;
    if (msg.header.sender_agent_id.empty()) {
        report.push_back({"EMPTY_SENDER", "sender_agent_id is empty"});
    }
    if (msg.header.recipient_agent_id.empty()) {
        report.push_back({"EMPTY_RECIPIENT", "recipient_agent_id is empty"});
    }
    if (!msg.header.sender_agent_id.empty() &&
        msg.header.sender_agent_id == msg.header.recipient_agent_id) {
        report.push_back({"SAME_PARTY", "sender and recipient are the same agent"});
    }
    if (!looks_like_uuid(msg.header.message_id)) {
        report.push_back({"BAD_MESSAGE_ID", "message_id is not a UUID: " + msg.header.message_id});
    }
    if (!parse_utc_iso8601(msg.header.timestamp)) {
        report.push_back({"BAD_TIMESTAMP", "timestamp is not ISO-8601 UTC: " + msg.header.timestamp});
    }
    if (!is_known_status(msg.header.status)) {
        report.push_back({"INVALID_STATUS", "unknown status: " + msg.header.status});
    }
    for (std::size_t i = 0; i < msg.parts.size(); ++i) {
        const MessagePart& part = msg.parts[i];
        const std::string where = "parts[" + std::to_string(i) + "]";
        if (part.kind == part_kind::text) {
            if (!part.content.is_string()) {
                report.push_back({"PART_SHAPE_MISMATCH", where + ": text part content must be a string"});
            }
        } else if (part.kind == part_kind::data) {
            if (!part.content.is_object()) {
                report.push_back({"PART_SHAPE_MISMATCH", where + ": data part content must be an object"});
            }
        } else {
            report.push_back({"UNKNOWN_PART_KIND", where + ": unknown kind '" + part.kind + "'"});
        }
    }
    return report;
}

} // namespace agentmesh::a2a
