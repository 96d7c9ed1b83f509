#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "dcnet/bits.hpp"

namespace dcnet {

// ============================================================================
// Randomness sources
//
// Every random choice a participant makes goes through a RandomTape. Two
// modes exist:
//   - Seeded: deterministic mt19937_64 stream; identical seeds give
//     bit-identical runs on every platform.
//   - Exhaustive: draws are read from a shared ChoiceLog that enumerates the
//     full tree of possible draw sequences, enabling exact distribution
//     checks over all joint randomness.
// ============================================================================

/// Shared odometer over every random choice of a run, in schedule order.
/// A run reads choices through draw(); unvisited positions extend the log
/// with value 0. advance() steps to the next assignment, depth-first.
class ChoiceLog {
 public:
  struct Entry {
    uint32_t domain;
    uint32_t value;
  };

  /// Read (or create) the next choice. Domain must be 2 or 3; larger draw
  /// domains would break the fixed weight scale used by the enumerator.
  uint32_t draw(uint32_t domain);

  /// Position the read cursor at the start for the next run.
  void rewind() { cursor_ = 0; }

  /// Move to the next assignment. Entries at positions below `floor` are
  /// pinned (used to partition the tree for parallel enumeration). Returns
  /// false once all assignments at or above `floor` are exhausted.
  bool advance(size_t floor = 0);

  /// Pre-pin a prefix of choices (parallel partitioning).
  void pin_prefix(const std::vector<Entry>& prefix);

  const std::vector<Entry>& entries() const { return entries_; }
  size_t consumed() const { return cursor_; }

 private:
  std::vector<Entry> entries_;
  size_t cursor_ = 0;
};

/// Per-participant random source.
class RandomTape {
 public:
  static RandomTape seeded(uint64_t seed);
  static RandomTape exhaustive(std::shared_ptr<ChoiceLog> log);

  /// Uniform value in [0, domain). domain <= 1 consumes no randomness.
  uint32_t draw(uint32_t domain);

  /// Uniform bit.
  uint8_t draw_bit() { return static_cast<uint8_t>(draw(2)); }

  /// True with probability num/den. num == 0 or num >= den consume nothing.
  bool draw_bool(uint32_t num, uint32_t den);

  /// Append `count` uniform bits to `out`.
  void draw_bits(size_t count, BitString& out);

 private:
  RandomTape() = default;
  std::optional<std::mt19937_64> eng_;  ///< engine exists only in seeded mode
  std::shared_ptr<ChoiceLog> log_;
};

/// splitmix64 mix function; used to derive per-participant seeds.
uint64_t splitmix64(uint64_t x);

/// The tapes of all participants of one run (index 1..n).
class TapeSet {
 public:
  /// Independent per-participant streams derived from one master seed.
  static TapeSet seeded(int n, uint64_t master_seed);

  /// All participants read from one shared exhaustive ChoiceLog.
  static TapeSet exhaustive(int n, std::shared_ptr<ChoiceLog> log);

  RandomTape& of(ParticipantId i) { return tapes_[static_cast<size_t>(i)]; }

 private:
  std::vector<RandomTape> tapes_;
};

}  // namespace dcnet
