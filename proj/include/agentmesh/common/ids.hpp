#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace agentmesh {

// Random UUID v4 in canonical 8-4-4-4-12 text form.
std::string uuid4();

bool looks_like_uuid(const std::string& text);

// Current UTC time as "YYYY-MM-DDThh:mm:ssZ" (second precision).
std::string now_utc_iso8601();

std::int64_t unix_now_seconds();

std::string to_utc_iso8601(std::int64_t unix_seconds);

// Accepts second-precision ISO-8601 UTC, optionally with a fractional
// part ("2025-06-01T09:30:00Z", "2025-06-01T09:30:00.250Z"). Returns
// the unix timestamp, or nullopt if the text does not parse.
std::optional<std::int64_t> parse_utc_iso8601(const std::string& text);

} // namespace agentmesh
