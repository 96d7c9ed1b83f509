#include "dcnet/anon_bit.hpp"

#include "dcnet/veto.hpp"
#include "dcnet/vote.hpp"

namespace dcnet {

Outcome<std::vector<AbtReceipt>> run_abt(
    const std::vector<std::vector<AbtCell>>& cells, int s, RunContext& ctx,
    bool broadcast_reveal) {
  int n = ctx.n();
  if (s < 1) throw ConfigError("round count must be positive");
  if (static_cast<int>(cells.size()) != n + 1)
    throw ConfigError("send matrix needs one row per participant");
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(cells[i].size()) != n + 1)
      throw ConfigError("send matrix rows must cover every target");
    if (cells[i][static_cast<size_t>(i)] != AbtCell::Abstain)
      throw ConfigError("self-cells must abstain");
  }

  std::vector<AbtReceipt> receipts(static_cast<size_t>(n) + 1);
  std::vector<uint8_t> failed(static_cast<size_t>(n) + 1, 0);

  for (int target = 1; target <= n; ++target) {
    VoteChoices choices(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
      choices[i] = static_cast<int>(cells[i][static_cast<size_t>(target)]) + 1;
    std::vector<BitString> sums = accumulate_rounds(choices, 3, s, ctx);

    ctx.begin_round();
    std::vector<BitString> revealed(static_cast<size_t>(n) + 1);
    bool missing = false;
    for (int i = 1; i <= n; ++i) {
      Revealed r = broadcast_reveal
                       ? ctx.reveal_broadcast(i, sums[i], target)
                       : ctx.reveal_private(i, target, sums[i], target);
      if (r.refused || static_cast<int>(r.bits.size()) != 3 * s)
        missing = true;
      else
        revealed[i] = std::move(r.bits);
    }
    if (missing) {
      failed[static_cast<size_t>(target)] = 1;
      continue;
    }
    Outcome<Tally> t = tally_rounds(revealed, 3, s, n);
    if (!t.is_completed()) {
      failed[static_cast<size_t>(target)] = 1;
      continue;
    }
    receipts[static_cast<size_t>(target)].zero_count = t.value().counts[1];
    receipts[static_cast<size_t>(target)].one_count = t.value().counts[2];
  }

  VetoResult closing = run_veto(failed, s, ctx, 0).value();
  if (closing.result)
    return Outcome<std::vector<AbtReceipt>>::aborted(
        AbortReason::VetoTriggered);
  return Outcome<std::vector<AbtReceipt>>::completed(std::move(receipts));
}

}  // namespace dcnet
