#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace acap {

// ISO 8601 UTC timestamps with "Z" suffix, second precision ("2026-02-27T00:00:00Z").
std::string format_utc(std::chrono::system_clock::time_point tp);
std::string now_utc();

// Accepts second precision with optional fractional seconds. nullopt on malformed input.
std::optional<std::chrono::system_clock::time_point> parse_utc(const std::string& s);

std::string uuid4();

std::string to_hex(const unsigned char* data, std::size_t len);
std::string base64url_encode(const unsigned char* data, std::size_t len);
std::string base64url_encode(const std::string& bytes);
std::optional<std::string> base64url_decode(const std::string& s);

}  // namespace acap
