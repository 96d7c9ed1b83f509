#include "dcnet/signaling.hpp"

#include "dcnet/parity.hpp"
#include "dcnet/veto.hpp"

namespace dcnet {

Outcome<int> run_collision_detection(const std::vector<int>& inputs, int s,
                                     RunContext& ctx) {
  int n = ctx.n();
  if (static_cast<int>(inputs.size()) != n + 1)
    throw ConfigError("collision detection needs one input per participant");
  for (int i = 1; i <= n; ++i)
    if (inputs[i] < 0 || inputs[i] > 2)
      throw ConfigError("collision inputs live in 0..2");

  std::vector<uint8_t> any(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) any[i] = inputs[i] >= 1;
  VetoResult a = run_veto(any, s, ctx, 1).value();
  if (a.result == 0) return Outcome<int>::completed(0);

  std::vector<uint8_t> crowded(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    crowded[i] = (any[i] && a.saw_other_one[i]) || inputs[i] == 2;
  VetoResult b = run_veto(crowded, s, ctx, 2).value();
  return Outcome<int>::completed(b.result ? 2 : 1);
}

Outcome<std::vector<uint8_t>> run_notification(
    const std::vector<std::vector<uint8_t>>& flags, int s, RunContext& ctx) {
  int n = ctx.n();
  if (s < 1) throw ConfigError("round count must be positive");
  if (static_cast<int>(flags.size()) != n + 1)
    throw ConfigError("notification needs one flag row per participant");
  for (int j = 1; j <= n; ++j) {
    if (static_cast<int>(flags[j].size()) != n + 1)
      throw ConfigError("notification rows must cover every target");
    for (int i = 1; i <= n; ++i) {
      if (flags[j][i] > 1) throw ConfigError("notification flags are bits");
      if (j == i && flags[j][i] != 0)
        throw ConfigError("self-notification is not allowed");
    }
  }

  std::vector<uint8_t> learned(static_cast<size_t>(n) + 1, 0);
  for (int target = 1; target <= n; ++target) {
    AnnouncementMode mode = AnnouncementMode::withheld({target}, n);
    for (int round = 0; round < s; ++round) {
      BitString p(static_cast<size_t>(n) + 1, 0);
      for (int j = 1; j <= n; ++j)
        if (j != target) p[j] = ctx.flip(j, flags[j][target], 1, 2, target);
      ParityRound r = run_parity(p, mode, ctx, target).value();
      if (r.refused)
        return Outcome<std::vector<uint8_t>>::aborted(
            AbortReason::RefusedBroadcast);
      if (r.learned(target) && r.y[static_cast<size_t>(target)] == 1)
        learned[static_cast<size_t>(target)] = 1;
    }
  }
  return Outcome<std::vector<uint8_t>>::completed(std::move(learned));
}

}  // namespace dcnet
