#pragma once

#include <optional>
#include <vector>

#include "dcnet/bits.hpp"
#include "dcnet/outcome.hpp"
#include "dcnet/runtime.hpp"

namespace dcnet {

// ============================================================================
// Anonymous message transmission
//
// Round stage: one shared parity round per codeword bit. A sender injects
// its tamper-evidently encoded message, every receiver injects a fresh
// one-time pad, everyone else injects zero; the announced round outcome is
// uniform, so only a receiver can unmask the stream. A closing veto (input
// 1 for any receiver whose decode failed) turns garbling into a global
// abort. The full protocol prepends sender counting and anonymous receiver
// notification.
// ============================================================================

/// Decoded payloads per participant; set for receivers only, and nullopt
/// for a receiver whose decode failed.
using AmtDeliveries = std::vector<std::optional<BitString>>;

/// Round stage plus closing veto. messages[i] nonempty makes i a sender
/// (length must equal message_bits); receiving[i] = 1 makes i pad and
/// decode. Rounds carry their 1-based index as the step index; the closing
/// veto runs at step index 0. Refused announcements leave a round outcome
/// of 0. Aborts with VetoTriggered.
Outcome<AmtDeliveries> run_amt_rounds(const std::vector<BitString>& messages,
                                      const std::vector<uint8_t>& receiving,
                                      int message_bits, int s,
                                      RunContext& ctx);

/// Known sender, known receiver. Completes with the receiver's decoded
/// message; aborts with VetoTriggered when decoding failed.
Outcome<BitString> run_fixed_role_amt(ParticipantId sender,
                                      ParticipantId receiver,
                                      const BitString& message, int s,
                                      RunContext& ctx);

/// One participant's intent for the full protocol.
struct AmtInput {
  ParticipantId receiver = 0;  ///< 0 = not sending
  BitString message;

  static AmtInput no_send() { return {}; }
  static AmtInput send(ParticipantId receiver, BitString message) {
    return {receiver, std::move(message)};
  }
  bool sending() const { return receiver != 0; }
};

enum class AmtResultKind : uint8_t { NoTransmission, Collision, Delivered };

const char* to_string(AmtResultKind k);

struct AmtResult {
  AmtResultKind kind = AmtResultKind::NoTransmission;
  AmtDeliveries delivered;  ///< populated when kind == Delivered
};

/// Full protocol: sender counting (0 senders -> NoTransmission, two or
/// more -> Collision), anonymous notification of the chosen receiver, then
/// the round stage between the self-identified sender and whoever was
/// notified. message_bits is a public parameter; every sender's message
/// must have exactly that length.
Outcome<AmtResult> run_amt(const std::vector<AmtInput>& inputs,
                           int message_bits, int s, RunContext& ctx);

}  // namespace dcnet
