#pragma once

#include <memory>
#include <vector>

#include "dcnet/adversary.hpp"
#include "dcnet/bits.hpp"
#include "dcnet/outcome.hpp"
#include "dcnet/tape.hpp"
#include "dcnet/transcript.hpp"

namespace dcnet {

// ============================================================================
// Run context
//
// Owns the communication primitives of one protocol run: reliable private
// channels, attributed (refusable) broadcast, and simultaneous broadcast
// implemented as collect-then-reveal. All adversarial deviations are applied
// here, at the channel boundary; a corrupt contribution rule never sees any
// honest contribution of the same simultaneous round.
//
// A single run is strictly sequential. Parallelism lives above runs (trial
// sweeps, exhaustive enumeration), never inside one.
// ============================================================================

/// Result of an attributed one-bit announcement.
struct AnnouncedBit {
  uint8_t bit = 0;
  bool refused = false;
};

/// Result of a multi-bit reveal.
struct Revealed {
  BitString bits;
  bool refused = false;
};

/// Result of one simultaneous broadcast.
struct SimBroadcastResult {
  std::vector<BitString> revealed;  ///< index 1..n
  std::vector<uint8_t> missing;     ///< index 1..n
  bool any_missing = false;
};

class RunContext {
 public:
  /// Throws ConfigError unless 3 <= n and corrupt ids are within 1..n.
  RunContext(int n, CorruptSet corrupt, TapeSet tapes, Recording recording);

  int n() const { return n_; }
  bool is_corrupt(ParticipantId i) const { return corrupt_flags_[static_cast<size_t>(i)] != 0; }
  const CorruptSet& corrupt() const { return corrupt_; }
  RandomTape& tape(ParticipantId i) { return tapes_.of(i); }
  Transcript& transcript() { return transcript_; }
  const Transcript& transcript() const { return transcript_; }
  uint32_t begin_round() { return transcript_.begin_round(); }

  /// Private send of one bit; returns the bit actually delivered (corrupt
  /// senders may tamper).
  uint8_t send_private_bit(ParticipantId from, ParticipantId to, uint8_t bit,
                           StepKind step = StepKind::ShareSend, int step_index = -1);

  /// Private send of a bit string; returns delivered payload.
  BitString send_private(ParticipantId from, ParticipantId to, const BitString& payload,
                         StepKind step = StepKind::ShareSend, int step_index = -1);

  /// Attributed one-bit broadcast. Corrupt senders may refuse or substitute.
  AnnouncedBit announce(ParticipantId from, uint8_t honest_bit,
                        StepKind step = StepKind::Announce, int step_index = -1);

  /// One-bit announcement delivered to a single receiver over the private
  /// channel (PrivateTo announcement mode). Refusal is observable.
  AnnouncedBit announce_private(ParticipantId from, ParticipantId to, uint8_t honest_bit,
                                StepKind step = StepKind::Announce, int step_index = -1);

  /// Multi-bit reveal over the private channel (targeted reveals).
  Revealed reveal_private(ParticipantId from, ParticipantId to, const BitString& honest_bits,
                          int step_index = -1);

  /// Multi-bit reveal over broadcast.
  Revealed reveal_broadcast(ParticipantId from, const BitString& honest_bits,
                            int step_index = -1);

  /// Simultaneous broadcast: contributions are collected (with deviations
  /// applied using only the contributor's own data), then revealed at once.
  SimBroadcastResult simultaneous_broadcast(const std::vector<BitString>& honest_contributions,
                                            StepKind step = StepKind::Announce,
                                            int step_index = -1);

  /// Randomized round-input bit: 0 stays 0, 1 flips to 1 with probability
  /// num/den. Corrupt participants with an OverrideFlip rule draw with the
  /// override probability regardless of input.
  uint8_t flip(ParticipantId who, uint8_t input, uint32_t num, uint32_t den,
               int step_index = -1);

 private:
  const Deviation* deviation(ParticipantId who, StepKind step, int step_index) const;
  uint8_t tamper_next(ParticipantId who, const Deviation& d, uint8_t bit);

  int n_;
  CorruptSet corrupt_;
  std::vector<uint8_t> corrupt_flags_;
  TapeSet tapes_;
  Transcript transcript_;
  std::vector<size_t> tamper_cursor_;
};

/// Validates a participant count shared by every protocol.
void require_participants(int n);

}  // namespace dcnet
