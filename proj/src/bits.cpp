#include "dcnet/bits.hpp"

#include <stdexcept>

namespace dcnet {

uint8_t xor_all(const BitString& bits) {
  uint8_t acc = 0;
  for (uint8_t b : bits) acc ^= b;
  return acc & 1;
}

static int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

BitString bits_from_hex(const std::string& hex) {
  if (hex.empty()) throw std::invalid_argument("empty hex string");
  BitString out;
  out.reserve(hex.size() * 4);
  for (char c : hex) {
    int d = hex_digit(c);
    if (d < 0) throw std::invalid_argument(std::string("invalid hex character '") + c + "'");
    for (int k = 3; k >= 0; --k) out.push_back((d >> k) & 1);
  }
  return out;
}

std::string bits_to_hex(const BitString& bits) {
  if (bits.size() % 4 != 0) throw std::invalid_argument("bit length not a multiple of 4");
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bits.size() / 4);
  for (size_t i = 0; i < bits.size(); i += 4) {
    int d = (bits[i] << 3) | (bits[i + 1] << 2) | (bits[i + 2] << 1) | bits[i + 3];
    out.push_back(digits[d]);
  }
  return out;
}

BitString bits_from_chars(const std::string& chars) {
  BitString out;
  out.reserve(chars.size());
  for (char c : chars) {
    if (c != '0' && c != '1') throw std::invalid_argument("invalid bit character");
    out.push_back(c == '1');
  }
  return out;
}

std::string bits_to_chars(const BitString& bits) {
  std::string out;
  out.reserve(bits.size());
  for (uint8_t b : bits) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace dcnet
