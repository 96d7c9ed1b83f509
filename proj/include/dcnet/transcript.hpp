#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcnet/bits.hpp"

namespace dcnet {

// ============================================================================
// Transcript
//
// Append-only log of every transmission of a run, with per-sender bit
// accounting. Three recording levels trade memory for fidelity:
//   Full:   events stored; serialize() and view_for() available.
//   Counts: only bit totals and round counter (large statistical sweeps).
//   View:   events of a fixed observer set serialized on the fly into a
//           compact buffer; nothing else stored (exhaustive enumeration).
// ============================================================================

enum class EventKind : uint8_t {
  Private,    ///< point-to-point send
  Broadcast,  ///< attributed broadcast (refusable)
  SimReveal,  ///< revealed contribution of a simultaneous broadcast
};

struct Event {
  uint32_t round;
  EventKind kind;
  ParticipantId sender;
  ParticipantId receiver;  ///< 0 for broadcasts/reveals
  bool refused;            ///< refusal / missing contribution marker
  BitString payload;       ///< empty when refused
};

enum class Recording : uint8_t { Full, Counts, View };

class Transcript {
 public:
  Transcript(int n, Recording mode);

  /// Observer set for View mode (flags indexed 1..n).
  void set_observers(std::vector<uint8_t> observers);

  uint32_t begin_round() { return ++round_; }
  uint32_t current_round() const { return round_; }

  void record_private(ParticipantId from, ParticipantId to, const BitString& payload);
  void record_private_bit(ParticipantId from, ParticipantId to, uint8_t bit);
  void record_broadcast_bit(ParticipantId from, uint8_t bit, bool refused);
  void record_broadcast(ParticipantId from, const BitString& payload, bool refused);
  void record_sim_reveal(ParticipantId from, const BitString& payload, bool missing);

  uint64_t bits_sent(ParticipantId i) const { return bits_sent_[static_cast<size_t>(i)]; }
  const std::vector<uint64_t>& bits_sent_all() const { return bits_sent_; }
  uint64_t total_bits() const;
  size_t event_count() const { return events_.size(); }
  const std::vector<Event>& events() const { return events_; }

  /// Full textual serialization (Full mode). Deterministic.
  std::string serialize() const;

  /// Projection visible to a set of observer ids: all broadcasts and
  /// reveals plus private events with an observer endpoint. Compact
  /// deterministic bytes.
  std::string view_for(const std::vector<ParticipantId>& observer_ids) const;

  /// Accumulated view buffer (View mode).
  const std::string& view_buffer() const { return view_buffer_; }

 private:
  void account(ParticipantId from, size_t bits);
  void append_view_bit(EventKind kind, ParticipantId from, ParticipantId to, bool refused,
                       uint8_t bit, bool has_payload);
  void append_view(EventKind kind, ParticipantId from, ParticipantId to, bool refused,
                   const BitString& payload);
  static void render_view_event(std::string& out, uint32_t round, EventKind kind,
                                ParticipantId from, ParticipantId to, bool refused,
                                const uint8_t* bits, size_t nbits);
  bool observes(ParticipantId i) const {
    return !observers_.empty() && observers_[static_cast<size_t>(i)] != 0;
  }

  int n_;
  Recording mode_;
  uint32_t round_ = 0;
  std::vector<Event> events_;
  std::vector<uint64_t> bits_sent_;
  std::vector<uint8_t> observers_;
  std::string view_buffer_;
};

}  // namespace dcnet
