#include "dcnet/veto.hpp"

namespace dcnet {

std::vector<std::vector<ParticipantId>> veto_orderings(int n) {
  require_participants(n);
  std::vector<std::vector<ParticipantId>> orderings;
  orderings.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    std::vector<ParticipantId> order;
    order.reserve(static_cast<size_t>(n));
    for (int i = k + 1; i <= n; ++i) order.push_back(i);
    for (int i = 1; i <= k; ++i) order.push_back(i);
    orderings.push_back(std::move(order));
  }
  return orderings;
}

uint8_t randomize_flip(uint8_t x, RandomTape& tape) {
  if ((x & 1u) == 0) return 0;
  return tape.draw_bool(1, 2) ? 1 : 0;
}

Outcome<VetoResult> run_veto(const std::vector<uint8_t>& inputs, int s, RunContext& ctx,
                             int step_index) {
  const int n = ctx.n();
  if (inputs.size() != static_cast<size_t>(n) + 1) throw ConfigError("inputs must be indexed 1..n");
  if (s < 1) throw ConfigError("repetition count must be at least 1");

  VetoResult out;
  out.saw_other_one.assign(static_cast<size_t>(n) + 1, 0);

  std::vector<uint8_t> flips(static_cast<size_t>(n) + 1, 0);
  for (const std::vector<ParticipantId>& order : veto_orderings(n)) {
    AnnouncementMode mode = AnnouncementMode::sequential(order);
    for (int rep = 0; rep < s; ++rep) {
      for (ParticipantId i = 1; i <= n; ++i)
        flips[static_cast<size_t>(i)] = ctx.flip(i, inputs[static_cast<size_t>(i)], 1, 2, step_index);
      Outcome<ParityRound> round = run_parity(flips, mode, ctx, step_index);
      // Sequential announcements cannot abort; refusal is reported in-band.
      const ParityRound& r = round.value();
      if (r.refused) {
        out.result = 1;
        for (ParticipantId i = 1; i <= n; ++i) out.saw_other_one[static_cast<size_t>(i)] = 1;
        continue;
      }
      uint8_t y = static_cast<uint8_t>(r.y[1]);
      if (y) out.result = 1;
      for (ParticipantId i = 1; i <= n; ++i)
        if (static_cast<uint8_t>(y ^ flips[static_cast<size_t>(i)]))
          out.saw_other_one[static_cast<size_t>(i)] = 1;
    }
  }
  return Outcome<VetoResult>::completed(std::move(out));
}

}  // namespace dcnet
