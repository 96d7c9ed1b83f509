#include "dcnet/amd.hpp"

#include <algorithm>

#include "dcnet/outcome.hpp"

namespace dcnet {
namespace {

// Low terms of an irreducible x^u + ... over GF(2), indexed by u - 1.
constexpr uint64_t kModulusLow[64] = {
    0x1,       0x3,        0x3,      0x3,   0x5,       0x3,        0x3,
    0x87,      0x3,        0x9,      0x5,   0x9,       0x27,       0x21,
    0x3,       0x47,       0x9,      0x9,   0x27,      0x9,        0x5,
    0x3,       0x21,       0x87,     0x9,   0x47,      0x27,       0x3,
    0x5,       0x3,        0x9,      0x400007, 0x401,  0x81,       0x5,
    0x201,     0x207,      0x87,     0x11,  0x8000007, 0x9,        0x81,
    0x1007,    0x21,       0x20007,  0x3,   0x21,      0x20007,    0x201,
    0x207,     0x10000007, 0x9,      0x47,  0x201,     0x81,       0x200007,
    0x11,      0x80001,    0x1000007, 0x3,  0x27,      0x20000001, 0x3,
    0x807};

void require_field_bits(int u) {
  if (u < 1 || u > 64) throw ConfigError("field width must be 1..64 bits");
}

uint64_t field_mask(int u) {
  return u == 64 ? ~UINT64_C(0) : (UINT64_C(1) << u) - 1;
}

/// Reads field_bits bits starting at offset, most significant first.
/// Positions past the end of bits read as zero.
uint64_t element_at(const BitString& bits, int offset, int field_bits) {
  uint64_t v = 0;
  for (int j = 0; j < field_bits; ++j) {
    int idx = offset + j;
    uint64_t b = idx < static_cast<int>(bits.size()) ? bits[idx] : 0;
    v = (v << 1) | b;
  }
  return v;
}

void append_element(BitString& out, uint64_t v, int field_bits) {
  for (int j = field_bits - 1; j >= 0; --j)
    out.push_back(static_cast<uint8_t>((v >> j) & 1));
}

/// tag = x^(d+2) + sum over i in 1..d of w_i x^i, evaluated at x = nonce.
uint64_t tag_of(const BitString& payload, uint64_t nonce,
                const AmdParams& params) {
  int u = params.field_bits;
  uint64_t acc =
      gf_pow(nonce, static_cast<uint64_t>(params.chunk_count) + 2, u);
  uint64_t xp = 1;
  for (int i = 1; i <= params.chunk_count; ++i) {
    xp = gf_mul(xp, nonce, u);
    acc ^= gf_mul(element_at(payload, (i - 1) * u, u), xp, u);
  }
  return acc;
}

}  // namespace

uint64_t gf_modulus_low(int field_bits) {
  require_field_bits(field_bits);
  return kModulusLow[field_bits - 1];
}

uint64_t gf_mul(uint64_t a, uint64_t b, int field_bits) {
  require_field_bits(field_bits);
  uint64_t mask = field_mask(field_bits);
  uint64_t top = UINT64_C(1) << (field_bits - 1);
  uint64_t low = kModulusLow[field_bits - 1];
  a &= mask;
  b &= mask;
  uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    uint64_t carry = a & top;
    a = (a << 1) & mask;
    if (carry) a ^= low;
  }
  return r;
}

uint64_t gf_pow(uint64_t base, uint64_t exponent, int field_bits) {
  require_field_bits(field_bits);
  base &= field_mask(field_bits);
  uint64_t r = 1;
  while (exponent != 0) {
    if (exponent & 1) r = gf_mul(r, base, field_bits);
    base = gf_mul(base, base, field_bits);
    exponent >>= 1;
  }
  return r;
}

uint64_t gf_inv(uint64_t a, int field_bits) {
  require_field_bits(field_bits);
  a &= field_mask(field_bits);
  if (a == 0) throw ConfigError("zero has no multiplicative inverse");
  // a^(2^u - 2) by Fermat.
  uint64_t e = field_mask(field_bits) - 1;
  if (field_bits == 64) e = ~UINT64_C(0) - 1;
  return gf_pow(a, e, field_bits);
}

AmdParams amd_params(int message_bits, int security) {
  if (message_bits < 1) throw ConfigError("message must hold at least one bit");
  if (security < 1) throw ConfigError("security level must be at least 1");
  int lg = 0;
  while ((INT64_C(1) << lg) < message_bits) ++lg;
  for (int u = std::max(1, lg + security); u <= 64; ++u) {
    int64_t d = (message_bits + u - 1) / u;
    if (d % 2 == 0) ++d;
    bool margin_ok =
        u - security >= 62 || d + 1 <= (INT64_C(1) << (u - security));
    bool range_ok = u >= 62 || d + 2 < (INT64_C(1) << u);
    if (margin_ok && range_ok)
      return AmdParams{message_bits, security, u, static_cast<int>(d)};
  }
  throw ConfigError("no field of 64 bits or fewer fits this message");
}

BitString amd_encode(const BitString& payload, const AmdParams& params,
                     RandomTape& tape) {
  if (static_cast<int>(payload.size()) != params.message_bits)
    throw ConfigError("payload length does not match code parameters");
  BitString nonce_bits;
  tape.draw_bits(params.field_bits, nonce_bits);
  uint64_t nonce = element_at(nonce_bits, 0, params.field_bits);
  uint64_t tag = tag_of(payload, nonce, params);
  BitString c = payload;
  append_element(c, nonce, params.field_bits);
  append_element(c, tag, params.field_bits);
  return c;
}

std::optional<BitString> amd_decode(const BitString& codeword,
                                    const AmdParams& params) {
  if (static_cast<int>(codeword.size()) != params.codeword_bits())
    throw ConfigError("codeword length does not match code parameters");
  BitString payload(codeword.begin(), codeword.begin() + params.message_bits);
  uint64_t nonce = element_at(codeword, params.message_bits, params.field_bits);
  uint64_t tag = element_at(codeword, params.message_bits + params.field_bits,
                            params.field_bits);
  if (tag_of(payload, nonce, params) != tag) return std::nullopt;
  return payload;
}

}  // namespace dcnet
