#pragma once

#include <vector>

#include "dcnet/outcome.hpp"
#include "dcnet/runtime.hpp"

namespace dcnet {

// ============================================================================
// XOR sharing round
//
// Each participant splits its input bit into n shares whose XOR equals the
// input, keeps one, and sends one to every other participant over private
// channels. Everyone XORs what they hold into a local value z_i; the z_i are
// then announced according to the mode below. The XOR of all z_i equals the
// XOR of all inputs, and any strict subset of shares is uniform.
// ============================================================================

/// How the local z values are (or are not) announced.
struct AnnouncementMode {
  enum class Kind : uint8_t {
    Simultaneous,  ///< one-shot simultaneous broadcast; missing => abort
    Sequential,    ///< attributed broadcasts in a fixed speaking order
    PrivateTo,     ///< every z sent privately to one receiver
    Withheld,      ///< some participants keep z local; the rest broadcast
  };
  Kind kind = Kind::Simultaneous;
  std::vector<ParticipantId> order;  ///< Sequential: speaking order
  ParticipantId receiver = 0;        ///< PrivateTo
  std::vector<uint8_t> silent;       ///< Withheld: flags indexed 1..n

  static AnnouncementMode simultaneous();
  static AnnouncementMode sequential(std::vector<ParticipantId> order);
  static AnnouncementMode private_to(ParticipantId receiver);
  /// Withheld: `silent_ids` keep z local, everyone else broadcasts in
  /// ascending id order. Passing all ids makes the round announcement-free.
  static AnnouncementMode withheld(const std::vector<ParticipantId>& silent_ids, int n);
};

/// Share vector for input x: n uniform bits conditioned on XOR == x.
/// Draws n-1 tape bits; the last share is the parity fix.
BitString make_shares(uint8_t x, int n, RandomTape& tape);

/// XOR of held bits.
uint8_t local_sum(const BitString& held);

/// Result of one sharing round.
struct ParityRound {
  std::vector<uint8_t> z;  ///< local sums, index 1..n (simulator view)
  std::vector<int8_t> y;   ///< reconstructed outcome, index 1..n; -1 = not learned
  bool refused = false;    ///< an announcer refused (Sequential/PrivateTo/Withheld)

  bool learned(ParticipantId p) const { return y[static_cast<size_t>(p)] >= 0; }
  int learner_count() const {
    int c = 0;
    for (size_t i = 1; i < y.size(); ++i) c += y[i] >= 0;
    return c;
  }
};

/// Runs one complete sharing round with the given inputs (index 1..n).
/// Simultaneous mode aborts with SimBroadcastFailure when a contribution is
/// missing. The other modes never abort here: refusals set `refused` and
/// leave `y` empty, and the caller decides the semantics.
///
/// Who learns y: everyone in Simultaneous/Sequential mode, the receiver in
/// PrivateTo mode, and in Withheld mode exactly a participant whose own id
/// is the only silent one (it holds the one missing z itself).
Outcome<ParityRound> run_parity(const std::vector<uint8_t>& inputs, const AnnouncementMode& mode,
                                RunContext& ctx, int step_index = -1);

}  // namespace dcnet
