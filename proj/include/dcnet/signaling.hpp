#pragma once

#include <vector>

#include "dcnet/outcome.hpp"
#include "dcnet/runtime.hpp"

namespace dcnet {

// ============================================================================
// Sender counting and anonymous notification
//
// Collision detection reports min(number of senders, 2) through two vetoes:
// first on "anyone there", then on "anyone besides me". Notification lets
// any subset of participants raise a flag at a target; the target learns
// only the OR of the flags aimed at it.
// ============================================================================

/// inputs[i] in {0,1,2}, index 1..n. Veto A runs on min(input, 1); when it
/// fires, each participant enters Veto B with 1 iff it claimed a sender in
/// Veto A and saw evidence of another, or its own input was 2. Returns 0,
/// 1 or 2 and never aborts. Veto A carries step index 1, Veto B index 2.
Outcome<int> run_collision_detection(const std::vector<int>& inputs, int s,
                                     RunContext& ctx);

/// flags[j][i] = 1 when j raises a flag at i; the diagonal must be 0. For
/// each target in ascending order, s sharing rounds where every other
/// participant contributes its flag thinned by a fair coin and the target
/// stays silent, so only the target reconstructs the round outcomes.
/// Returns the per-target ORs (index 1..n); aborts on the first refusal to
/// announce. Steps carry the target as their index.
Outcome<std::vector<uint8_t>> run_notification(
    const std::vector<std::vector<uint8_t>>& flags, int s, RunContext& ctx);

}  // namespace dcnet
