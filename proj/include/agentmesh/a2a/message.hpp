#pragma once

#include "agentmesh/common/errors.hpp"
#include "agentmesh/common/json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace agentmesh::a2a {

// Message statuses are carried as plain strings so that loosely parsed
// wire forms can hold out-of-domain values for validate_message to
// report instead of aborting the parse.
namespace status {
inline constexpr const char* pending = "pending";
inline constexpr const char* delivered = "delivered";
inline constexpr const char* processed = "processed";
inline constexpr const char* failed = "failed";
} // namespace status

bool is_known_status(const std::string& value);

namespace part_kind {
inline constexpr const char* text = "text";
inline constexpr const char* data = "data";
} // namespace part_kind

struct MessageHeader {
    std::string sender_agent_id;
    std::string recipient_agent_id;
    std::optional<std::string> task_id; // omitted from the wire when absent
    std::string message_id;             // UUID v4 text
    std::string timestamp;              // ISO-8601 UTC, restored verbatim
    std::string status = status::pending;

    bool operator==(const MessageHeader&) const = default;
};

// Content block inside a message: a string when kind=text, a structured
// object when kind=data.
struct MessagePart {
    std::string kind;
    json content;
    std::map<std::string, std::string> metadata;

    bool operator==(const MessagePart&) const = default;
};

MessagePart text_part(std::string text,
                      std::map<std::string, std::string> metadata = {});
MessagePart data_part(json content,
                      std::map<std::string, std::string> metadata = {});

struct A2AMessage {
    MessageHeader header;
    json body = json::object();
    std::vector<MessagePart> parts;

    bool operator==(const A2AMessage&) const = default;
};

// Fields that had to be filled with defaults while parsing a loose wire
// form (e.g. a header without "status" or "timestamp").
struct ParseReport {
    std::vector<std::string> defaulted;

    bool defaulted_field(const std::string& name) const;
};

struct Violation {
    std::string code;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

json to_json(const Violation& violation);

// Builds a message with a fresh message_id, the current UTC timestamp and
// status pending. Throws SchemaError(INVALID_PARTY) when sender/recipient
// are empty or equal.
A2AMessage make_message(const std::string& sender, const std::string& recipient,
                        json body = json::object(),
                        std::vector<MessagePart> parts = {},
                        std::optional<std::string> task_id = std::nullopt);

// Canonical wire form: single line, keys sorted, UTF-8 kept unescaped.
std::string message_to_wire(const A2AMessage& msg);
json message_to_json(const A2AMessage& msg);

// Loose parse: accepts any valid JSON object shaped like a message.
// Missing status -> pending, missing timestamp -> now, missing
// message_id -> fresh UUID; every applied default lands in `report`.
// Throws ParseError on malformed JSON, SchemaError when the header lacks
// sender or recipient.
A2AMessage message_from_wire(const std::string& text, ParseReport* report = nullptr);
A2AMessage message_from_json(const json& value, ParseReport* report = nullptr);

// Reports every violated invariant; never throws, never mutates.
// Codes: EMPTY_SENDER, EMPTY_RECIPIENT, SAME_PARTY, BAD_MESSAGE_ID,
// BAD_TIMESTAMP, INVALID_STATUS, UNKNOWN_PART_KIND, PART_SHAPE_MISMATCH.
ValidationReport validate_message(const A2AMessage& msg);

} // namespace agentmesh::a2a
