#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace finreward {

// Hex-encoded SHA-256 of a byte string (lowercase, 64 chars).
std::string sha256_hex(std::string_view data);

// First 8 bytes of SHA-256 as an integer; used to seed deterministic
// generators from request content.
uint64_t sha256_prefix64(std::string_view data);

}  // namespace finreward
