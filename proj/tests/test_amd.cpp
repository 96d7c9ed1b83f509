#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "dcnet/amd.hpp"
#include "dcnet/outcome.hpp"
#include "dcnet/tape.hpp"
#include "doctest.h"

using namespace dcnet;

namespace {

// ==== independent polynomial oracle over GF(2) ====
// Coefficient vectors as __int128 bit masks, enough room for degree 64.

using Poly = unsigned __int128;

int pdeg(Poly p) {
  int d = -1;
  while (p != 0) {
    p >>= 1;
    ++d;
  }
  return d;
}

Poly pmod(Poly a, Poly f) {
  int df = pdeg(f);
  while (pdeg(a) >= df) a ^= f << (pdeg(a) - df);
  return a;
}

Poly pmulmod(Poly a, Poly b, Poly f) {
  Poly r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (pdeg(a) >= pdeg(f)) a ^= f;
  }
  return r;
}

Poly pgcd(Poly a, Poly b) {
  while (b != 0) {
    Poly t = pmod(a, b);
    a = b;
    b = t;
  }
  return a;
}

/// x^(2^k) reduced by f.
Poly xpow2k(int k, Poly f) {
  Poly r = pmod(Poly(2), f);
  for (int i = 0; i < k; ++i) r = pmulmod(r, r, f);
  return r;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      ps.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

/// Rabin's criterion: x^(2^u) = x mod f, and for every prime q | u the
/// polynomial x^(2^(u/q)) - x is coprime to f.
bool rabin_irreducible(int u, Poly f) {
  Poly x = pmod(Poly(2), f);
  if (xpow2k(u, f) != x) return false;
  for (int q : prime_divisors(u)) {
    if (pgcd(f, xpow2k(u / q, f) ^ x) != 1) return false;
  }
  return true;
}

BitString rand_bits(RandomTape& tape, size_t n) {
  BitString out;
  tape.draw_bits(n, out);
  return out;
}

bool params_fit(int m, int s, int u) {
  if (u < 1 || u > 64) return false;
  int lg = 0;
  while ((INT64_C(1) << lg) < m) ++lg;
  if (u < lg + s) return false;
  int64_t d = (m + u - 1) / u;
  if (d % 2 == 0) ++d;
  bool margin = u - s >= 62 || d + 1 <= (INT64_C(1) << (u - s));
  bool range = u >= 62 || d + 2 < (INT64_C(1) << u);
  return margin && range;
}

}  // namespace

TEST_CASE("every published modulus is irreducible") {
  for (int u = 1; u <= 64; ++u) {
    Poly f = (Poly(1) << u) ^ Poly(gf_modulus_low(u));
    CAPTURE(u);
    REQUIRE(rabin_irreducible(u, f));
  }
  CHECK_THROWS_AS(gf_modulus_low(0), ConfigError);
  CHECK_THROWS_AS(gf_modulus_low(65), ConfigError);
}

TEST_CASE("field arithmetic obeys the ring laws") {
  RandomTape tape = RandomTape::seeded(4242);
  const int widths[] = {1, 2, 8, 13, 26, 32, 47, 63, 64};
  for (int u : widths) {
    uint64_t mask = u == 64 ? ~UINT64_C(0) : (UINT64_C(1) << u) - 1;
    auto rnd = [&] {
      uint64_t v = 0;
      for (int j = 0; j < u; ++j) v = (v << 1) | tape.draw_bit();
      return v & mask;
    };
    for (int t = 0; t < 1200; ++t) {
      uint64_t a = rnd(), b = rnd(), c = rnd();
      if (gf_mul(a, b, u) != gf_mul(b, a, u)) FAIL("commutativity at u=", u);
      if (gf_mul(gf_mul(a, b, u), c, u) != gf_mul(a, gf_mul(b, c, u), u))
        FAIL("associativity at u=", u);
      if (gf_mul(a, b ^ c, u) != (gf_mul(a, b, u) ^ gf_mul(a, c, u)))
        FAIL("distributivity at u=", u);
      if (gf_mul(a, 1, u) != a) FAIL("identity at u=", u);
      if (gf_mul(a, 0, u) != 0) FAIL("absorption at u=", u);
      if (a != 0 && gf_mul(a, gf_inv(a, u), u) != 1) FAIL("inverse at u=", u);
      uint64_t frob = a;
      for (int j = 0; j < u; ++j) frob = gf_mul(frob, frob, u);
      if (frob != a) FAIL("closure under repeated squaring at u=", u);
    }
  }
  CHECK_THROWS_AS(gf_inv(0, 8), ConfigError);
  CHECK_THROWS_AS(gf_mul(1, 1, 0), ConfigError);
  CHECK_THROWS_AS(gf_mul(1, 1, 65), ConfigError);
}

TEST_CASE("powers match repeated multiplication") {
  for (int u : {5, 16, 33}) {
    uint64_t x = 0xB5 & ((UINT64_C(1) << u) - 1);
    uint64_t acc = 1;
    for (uint64_t e = 0; e <= 40; ++e) {
      CHECK(gf_pow(x, e, u) == acc);
      acc = gf_mul(acc, x, u);
    }
  }
  CHECK(gf_pow(0, 0, 8) == 1);
  CHECK(gf_pow(0, 7, 8) == 0);
}

TEST_CASE("parameter selection picks the smallest workable field") {
  AmdParams p = amd_params(1, 4);
  CHECK(p.field_bits == 5);
  CHECK(p.chunk_count == 1);
  CHECK(p.codeword_bits() == 11);

  for (int s : {1, 4, 10, 16, 20}) {
    for (int m : {1, 2, 7, 8, 9, 63, 64, 65, 500, 1000, 4096, 100000}) {
      AmdParams q = amd_params(m, s);
      CAPTURE(m);
      CAPTURE(s);
      REQUIRE(q.chunk_count % 2 == 1);
      REQUIRE(static_cast<int64_t>(q.chunk_count) * q.field_bits >= m);
      REQUIRE(params_fit(m, s, q.field_bits));
      REQUIRE_FALSE(params_fit(m, s, q.field_bits - 1));
      // the advertised detection bound follows from the margin rule
      REQUIRE(std::ldexp(static_cast<double>(q.chunk_count + 1),
                         -q.field_bits) <= std::ldexp(1.0, -s));
    }
  }
  CHECK_THROWS_AS(amd_params(0, 4), ConfigError);
  CHECK_THROWS_AS(amd_params(4, 0), ConfigError);
}

TEST_CASE("decode inverts encode for every message") {
  RandomTape tape = RandomTape::seeded(90125);
  for (int m : {1, 8, 64, 1000}) {
    AmdParams p = amd_params(m, 8);
    for (int t = 0; t < 2500; ++t) {
      BitString w = rand_bits(tape, m);
      BitString c = amd_encode(w, p, tape);
      if (static_cast<int>(c.size()) != m + 2 * p.field_bits)
        FAIL("length at m=", m);
      auto back = amd_decode(c, p);
      if (!back || *back != w) FAIL("round trip at m=", m);
    }
  }
}

TEST_CASE("codewords are systematic and deterministic") {
  AmdParams p = amd_params(24, 6);
  RandomTape t1 = RandomTape::seeded(5);
  RandomTape t2 = RandomTape::seeded(5);
  BitString w = rand_bits(t1, 24);
  BitString w2 = rand_bits(t2, 24);
  REQUIRE(w == w2);
  BitString c1 = amd_encode(w, p, t1);
  BitString c2 = amd_encode(w, p, t2);
  CHECK(c1 == c2);
  CHECK(BitString(c1.begin(), c1.begin() + 24) == w);

  // nonce occupies the middle field element, most significant bit first
  RandomTape t3 = RandomTape::seeded(5);
  rand_bits(t3, 24);
  BitString nonce_bits = rand_bits(t3, p.field_bits);
  CHECK(BitString(c1.begin() + 24, c1.begin() + 24 + p.field_bits) ==
        nonce_bits);
}

TEST_CASE("touching only the tag is always caught") {
  AmdParams p = amd_params(8, 10);
  RandomTape tape = RandomTape::seeded(31337);
  for (int t = 0; t < 50; ++t) {
    BitString w = rand_bits(tape, 8);
    BitString c = amd_encode(w, p, tape);
    for (int j = 0; j < p.field_bits; ++j) {
      BitString bad = c;
      bad[8 + p.field_bits + j] ^= 1;
      if (amd_decode(bad, p)) FAIL("tag flip accepted at bit ", j);
    }
  }
}

TEST_CASE("a payload bit flip is caught near always") {
  AmdParams p = amd_params(8, 10);
  RandomTape tape = RandomTape::seeded(0xFEED);
  BitString w = rand_bits(tape, 8);
  const int kTrials = 1000000;
  int rejected = 0;
  for (int t = 0; t < kTrials; ++t) {
    BitString c = amd_encode(w, p, tape);
    c[3] ^= 1;
    if (!amd_decode(c, p)) ++rejected;
  }
  double sigma = std::sqrt(kTrials * std::ldexp(1.0, -10) *
                           (1.0 - std::ldexp(1.0, -10)));
  double floor = kTrials * (1.0 - std::ldexp(1.0, -10)) - 3.0 * sigma;
  CHECK(rejected >= static_cast<int>(floor));
}

TEST_CASE("fixed offsets chosen before the nonce rarely survive") {
  AmdParams p = amd_params(32, 10);
  RandomTape tape = RandomTape::seeded(0xC0DE);
  const int kTrials = 100000;
  double rate_bound = std::ldexp(1.0, -10) +
                      3.0 * std::sqrt(std::ldexp(1.0, -10) / kTrials);
  int limit = static_cast<int>(rate_bound * kTrials);
  int total = p.codeword_bits();
  for (int o = 0; o < 100; ++o) {
    BitString offset;
    do {
      offset = rand_bits(tape, total);
    } while (std::count(offset.begin(), offset.end(), 1) == 0);
    BitString w = rand_bits(tape, 32);
    int accepted = 0;
    for (int t = 0; t < kTrials; ++t) {
      BitString c = amd_encode(w, p, tape);
      for (int j = 0; j < total; ++j) c[j] ^= offset[j];
      if (amd_decode(c, p)) ++accepted;
    }
    CAPTURE(o);
    REQUIRE(accepted <= limit);
  }
}

TEST_CASE("an even chunk count would collapse under squaring") {
  // With two chunks the mask exponent is 4, and (x + D)^4 + x^4 = D^4
  // does not involve x at all: shifting the nonce by D and the tag by
  // D^4 passes every time. The parameter rule keeps the count odd to
  // close exactly this hole.
  AmdParams bad{16, 1, 8, 2};
  RandomTape tape = RandomTape::seeded(77);
  BitString w(16, 0);
  uint64_t delta = 0x35;
  uint64_t patch = gf_pow(delta, 4, 8);
  int accepted = 0;
  for (int t = 0; t < 200; ++t) {
    BitString c = amd_encode(w, bad, tape);
    for (int j = 0; j < 8; ++j) {
      c[16 + j] ^= (delta >> (7 - j)) & 1;
      c[24 + j] ^= (patch >> (7 - j)) & 1;
    }
    if (amd_decode(c, bad)) ++accepted;
  }
  CHECK(accepted == 200);
}

TEST_CASE("length mismatches are rejected up front") {
  AmdParams p = amd_params(8, 4);
  RandomTape tape = RandomTape::seeded(1);
  BitString w = rand_bits(tape, 9);
  CHECK_THROWS_AS(amd_encode(w, p, tape), ConfigError);
  BitString c(p.codeword_bits() - 1, 0);
  CHECK_THROWS_AS(amd_decode(c, p), ConfigError);
}
