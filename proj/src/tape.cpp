#include "dcnet/tape.hpp"

#include <stdexcept>

#include "dcnet/outcome.hpp"

namespace dcnet {

uint32_t ChoiceLog::draw(uint32_t domain) {
  if (domain != 2 && domain != 3)
    throw ConfigError("exhaustive tapes support draw domains 2 and 3 only");
  if (cursor_ < entries_.size()) {
    const Entry& e = entries_[cursor_++];
    if (e.domain != domain)
      throw std::logic_error("exhaustive enumeration: draw schedule diverged");
    return e.value;
  }
  entries_.push_back({domain, 0});
  ++cursor_;
  return 0;
}

bool ChoiceLog::advance(size_t floor) {
  while (entries_.size() > floor) {
    Entry& last = entries_.back();
    if (last.value + 1 < last.domain) {
      ++last.value;
      return true;
    }
    entries_.pop_back();
  }
  return false;
}

void ChoiceLog::pin_prefix(const std::vector<Entry>& prefix) {
  entries_ = prefix;
  cursor_ = 0;
}

RandomTape RandomTape::seeded(uint64_t seed) {
  RandomTape t;
  t.eng_.emplace(seed);
  return t;
}

RandomTape RandomTape::exhaustive(std::shared_ptr<ChoiceLog> log) {
  RandomTape t;
  t.log_ = std::move(log);
  return t;
}

uint32_t RandomTape::draw(uint32_t domain) {
  if (domain <= 1) return 0;
  if (log_) return log_->draw(domain);
  std::mt19937_64& eng = *eng_;
  if ((domain & (domain - 1)) == 0) {
    return static_cast<uint32_t>(eng() & (domain - 1));
  }
  // Rejection sampling; keeps the stream identical across platforms.
  uint64_t m = (UINT64_MAX % domain + 1) % domain;  // 2^64 mod domain
  uint64_t r = eng();
  while (m != 0 && r > UINT64_MAX - m) r = eng();
  return static_cast<uint32_t>(r % domain);
}

bool RandomTape::draw_bool(uint32_t num, uint32_t den) {
  if (num == 0) return false;
  if (num >= den) return true;
  return draw(den) < num;
}

void RandomTape::draw_bits(size_t count, BitString& out) {
  for (size_t i = 0; i < count; ++i) out.push_back(draw_bit());
}

uint64_t splitmix64(uint64_t x) {
  x += UINT64_C(0x9E3779B97F4A7C15);
  x = (x ^ (x >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
  x = (x ^ (x >> 27)) * UINT64_C(0x94D049BB133111EB);
  return x ^ (x >> 31);
}

TapeSet TapeSet::seeded(int n, uint64_t master_seed) {
  TapeSet ts;
  ts.tapes_.reserve(static_cast<size_t>(n) + 1);
  ts.tapes_.push_back(RandomTape::seeded(0));  // slot 0 unused
  for (int i = 1; i <= n; ++i)
    ts.tapes_.push_back(RandomTape::seeded(splitmix64(master_seed ^ (UINT64_C(0x517CC1B727220A95) * static_cast<uint64_t>(i)))));
  return ts;
}

TapeSet TapeSet::exhaustive(int n, std::shared_ptr<ChoiceLog> log) {
  TapeSet ts;
  ts.tapes_.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) ts.tapes_.push_back(RandomTape::exhaustive(log));
  return ts;
}

}  // namespace dcnet
