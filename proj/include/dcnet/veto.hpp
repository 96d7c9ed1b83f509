#pragma once

#include <vector>

#include "dcnet/outcome.hpp"
#include "dcnet/parity.hpp"
#include "dcnet/runtime.hpp"

namespace dcnet {

// ============================================================================
// Veto (reliable logical OR)
//
// s repetitions of n sharing rounds, one speaking order per possible last
// speaker. A participant with input 1 injects a fresh coin into each round;
// any odd round or any observed refusal makes everyone output 1. Nobody can
// force an abort, and nobody learns who vetoed.
// ============================================================================

/// n speaking orders; the k-th is the rotation (k+1, ..., n, 1, ..., k),
/// so every participant is last exactly once.
std::vector<std::vector<ParticipantId>> veto_orderings(int n);

/// Round input: 0 stays 0, 1 becomes a fresh fair coin.
uint8_t randomize_flip(uint8_t x, RandomTape& tape);

struct VetoResult {
  uint8_t result = 0;
  /// Local witness per participant (index 1..n): some round's outcome
  /// differed from the participant's own flip, or a refusal was seen.
  /// Meaningful for participants with input 1.
  std::vector<uint8_t> saw_other_one;
};

/// Runs the full veto: for each of the n orderings, s sharing rounds with
/// randomized inputs and sequential announcements. Never aborts; refusals
/// leave the affected round undefined, force result = 1 and set every
/// witness, and the remaining rounds still execute so the transcript shape
/// stays input-independent.
///
/// `step_index` scopes the flip and channel steps for adversary rules when
/// the veto runs inside a larger protocol.
Outcome<VetoResult> run_veto(const std::vector<uint8_t>& inputs, int s, RunContext& ctx,
                             int step_index = -1);

}  // namespace dcnet
