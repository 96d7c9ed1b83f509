#pragma once

#include <vector>

#include "dcnet/outcome.hpp"
#include "dcnet/runtime.hpp"

namespace dcnet {

// ============================================================================
// Anonymous bit transmission
//
// Every participant may aim a bit at any subset of peers. Each target runs
// its own three-candidate election (zero, one, abstain) whose reveal goes to
// the target alone, so the target privately learns how many peers sent each
// value, and nobody learns who sent what. A final veto over the per-target
// success bits turns any local inconsistency into a global abort.
// ============================================================================

/// A cell of the send matrix: a bit aimed at one target, or silence.
enum class AbtCell : uint8_t { Zero = 0, One = 1, Abstain = 2 };

/// What one target privately learns.
struct AbtReceipt {
  int zero_count = 0;
  int one_count = 0;
};

/// cells[i][j] is what i sends to j; the diagonal must be Abstain. Runs one
/// sub-election per target in ascending order (the reveal carries the target
/// as its step index), then a closing veto on the success bits with step
/// index 0. Aborts with VetoTriggered when any target's tally failed to
/// decode. When broadcast_reveal is set, the reveal phase uses attributed
/// broadcast instead of the target's private channel.
Outcome<std::vector<AbtReceipt>> run_abt(
    const std::vector<std::vector<AbtCell>>& cells, int s, RunContext& ctx,
    bool broadcast_reveal = false);

}  // namespace dcnet
