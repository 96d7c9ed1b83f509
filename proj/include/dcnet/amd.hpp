#pragma once

#include <cstdint>
#include <optional>

#include "dcnet/bits.hpp"
#include "dcnet/tape.hpp"

namespace dcnet {

// ==== GF(2^u) arithmetic ====

/// Low-order terms of the field modulus: x^u + gf_modulus_low(u) is
/// irreducible over GF(2). Part of the wire format; fixed for u in 1..64.
uint64_t gf_modulus_low(int field_bits);

/// Product of a and b reduced by the field modulus.
uint64_t gf_mul(uint64_t a, uint64_t b, int field_bits);

/// base raised to exponent by square and multiply.
uint64_t gf_pow(uint64_t base, uint64_t exponent, int field_bits);

/// Multiplicative inverse of a nonzero element.
uint64_t gf_inv(uint64_t a, int field_bits);

// ==== Tamper-evident encoding ====

/// Code shape for message_bits-bit payloads at a given security level.
/// Any fixed XOR offset applied to a codeword survives decoding with
/// probability at most (chunk_count + 1) / 2^field_bits <= 2^-security.
struct AmdParams {
  int message_bits;
  int security;
  int field_bits;
  int chunk_count;

  int codeword_bits() const { return message_bits + 2 * field_bits; }
};

/// Smallest field satisfying field_bits >= ceil(log2 m) + security,
/// chunk_count + 1 <= 2^(field_bits - security) and
/// chunk_count + 2 < 2^field_bits. chunk_count is kept odd (padding by
/// one implicit zero chunk) so the x^(chunk_count+2) mask term keeps an
/// odd exponent; even exponents collapse under squaring and would let a
/// fixed offset slip through unconditionally.
AmdParams amd_params(int message_bits, int security);

/// payload || nonce || tag. Field elements are laid out most significant
/// bit first; the payload is split into chunk_count field elements with
/// implicit zero padding at the tail.
BitString amd_encode(const BitString& payload, const AmdParams& params,
                     RandomTape& tape);

/// Recovers the payload, or nullopt when the recomputed tag differs.
std::optional<BitString> amd_decode(const BitString& codeword,
                                    const AmdParams& params);

}  // namespace dcnet
