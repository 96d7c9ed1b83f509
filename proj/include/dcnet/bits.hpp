#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dcnet {

/// Bit sequence, one bit per byte (values 0 or 1).
using BitString = std::vector<uint8_t>;

/// Participant identifier, 1-based. 0 is reserved for "all"/"none" markers.
using ParticipantId = int;

/// XOR of all bits in `bits`.
uint8_t xor_all(const BitString& bits);

/// Parse a hex string into bits, most significant bit of each nibble first.
/// Throws std::invalid_argument on non-hex characters or empty input.
BitString bits_from_hex(const std::string& hex);

/// Inverse of bits_from_hex. Length must be a multiple of 4.
std::string bits_to_hex(const BitString& bits);

/// Parse a string of '0'/'1' characters.
BitString bits_from_chars(const std::string& chars);

/// Render as '0'/'1' characters.
std::string bits_to_chars(const BitString& bits);

}  // namespace dcnet
