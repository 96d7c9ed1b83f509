#include "dcnet/parity.hpp"

#include <algorithm>

namespace dcnet {

AnnouncementMode AnnouncementMode::simultaneous() {
  return AnnouncementMode{};
}

AnnouncementMode AnnouncementMode::sequential(std::vector<ParticipantId> order) {
  AnnouncementMode m;
  m.kind = Kind::Sequential;
  m.order = std::move(order);
  return m;
}

AnnouncementMode AnnouncementMode::private_to(ParticipantId receiver) {
  AnnouncementMode m;
  m.kind = Kind::PrivateTo;
  m.receiver = receiver;
  return m;
}

AnnouncementMode AnnouncementMode::withheld(const std::vector<ParticipantId>& silent_ids, int n) {
  AnnouncementMode m;
  m.kind = Kind::Withheld;
  m.silent.assign(static_cast<size_t>(n) + 1, 0);
  for (ParticipantId p : silent_ids) {
    if (p < 1 || p > n) throw ConfigError("withheld: participant id out of range");
    m.silent[static_cast<size_t>(p)] = 1;
  }
  return m;
}

BitString make_shares(uint8_t x, int n, RandomTape& tape) {
  BitString shares(static_cast<size_t>(n));
  uint8_t acc = 0;
  for (int k = 0; k + 1 < n; ++k) {
    shares[static_cast<size_t>(k)] = tape.draw_bit();
    acc ^= shares[static_cast<size_t>(k)];
  }
  shares[static_cast<size_t>(n) - 1] = static_cast<uint8_t>((x & 1u) ^ acc);
  return shares;
}

uint8_t local_sum(const BitString& held) {
  return xor_all(held);
}

static void check_permutation(const std::vector<ParticipantId>& order, int n) {
  if (static_cast<int>(order.size()) != n) throw ConfigError("announcement order must cover all participants");
  std::vector<uint8_t> seen(static_cast<size_t>(n) + 1, 0);
  for (ParticipantId p : order) {
    if (p < 1 || p > n || seen[static_cast<size_t>(p)]) {
      throw ConfigError("announcement order must be a permutation of participant ids");
    }
    seen[static_cast<size_t>(p)] = 1;
  }
}

Outcome<ParityRound> run_parity(const std::vector<uint8_t>& inputs, const AnnouncementMode& mode,
                                RunContext& ctx, int step_index) {
  const int n = ctx.n();
  if (inputs.size() != static_cast<size_t>(n) + 1) throw ConfigError("inputs must be indexed 1..n");

  ParityRound round;
  round.z.assign(static_cast<size_t>(n) + 1, 0);
  round.y.assign(static_cast<size_t>(n) + 1, -1);

  // Share phase: z starts as each participant's kept share and accumulates
  // the shares received from the others.
  ctx.begin_round();
  std::vector<BitString> shares(static_cast<size_t>(n) + 1);
  for (ParticipantId i = 1; i <= n; ++i) {
    shares[static_cast<size_t>(i)] = make_shares(inputs[static_cast<size_t>(i)], n, ctx.tape(i));
    round.z[static_cast<size_t>(i)] ^= shares[static_cast<size_t>(i)][static_cast<size_t>(i) - 1];
  }
  for (ParticipantId i = 1; i <= n; ++i) {
    for (ParticipantId j = 1; j <= n; ++j) {
      if (j == i) continue;
      uint8_t b = shares[static_cast<size_t>(i)][static_cast<size_t>(j) - 1];
      round.z[static_cast<size_t>(j)] ^= ctx.send_private_bit(i, j, b, StepKind::ShareSend, step_index);
    }
  }

  // Announcement phase.
  ctx.begin_round();
  switch (mode.kind) {
    case AnnouncementMode::Kind::Simultaneous: {
      std::vector<BitString> contrib(static_cast<size_t>(n) + 1);
      for (ParticipantId i = 1; i <= n; ++i) contrib[static_cast<size_t>(i)] = {round.z[static_cast<size_t>(i)]};
      SimBroadcastResult sim = ctx.simultaneous_broadcast(contrib, StepKind::Announce, step_index);
      if (sim.any_missing) return Outcome<ParityRound>::aborted(AbortReason::SimBroadcastFailure);
      uint8_t y = 0;
      for (ParticipantId i = 1; i <= n; ++i) y ^= sim.revealed[static_cast<size_t>(i)][0];
      for (ParticipantId p = 1; p <= n; ++p) round.y[static_cast<size_t>(p)] = static_cast<int8_t>(y);
      break;
    }
    case AnnouncementMode::Kind::Sequential: {
      check_permutation(mode.order, n);
      uint8_t acc = 0;
      for (ParticipantId i : mode.order) {
        AnnouncedBit a = ctx.announce(i, round.z[static_cast<size_t>(i)], StepKind::Announce, step_index);
        if (a.refused) round.refused = true;
        acc ^= a.bit;
      }
      if (!round.refused) {
        for (ParticipantId p = 1; p <= n; ++p) round.y[static_cast<size_t>(p)] = static_cast<int8_t>(acc);
      }
      break;
    }
    case AnnouncementMode::Kind::PrivateTo: {
      if (mode.receiver < 1 || mode.receiver > n) throw ConfigError("private announcement receiver out of range");
      uint8_t acc = round.z[static_cast<size_t>(mode.receiver)];
      for (ParticipantId i = 1; i <= n; ++i) {
        if (i == mode.receiver) continue;
        AnnouncedBit a = ctx.announce_private(i, mode.receiver, round.z[static_cast<size_t>(i)],
                                              StepKind::Announce, step_index);
        if (a.refused) round.refused = true;
        acc ^= a.bit;
      }
      if (!round.refused) round.y[static_cast<size_t>(mode.receiver)] = static_cast<int8_t>(acc);
      break;
    }
    case AnnouncementMode::Kind::Withheld: {
      if (mode.silent.size() != static_cast<size_t>(n) + 1) throw ConfigError("withheld flags must be indexed 1..n");
      uint8_t acc = 0;
      int silent_count = 0;
      ParticipantId lone_silent = 0;
      for (ParticipantId i = 1; i <= n; ++i) {
        if (mode.silent[static_cast<size_t>(i)]) {
          ++silent_count;
          lone_silent = i;
          continue;
        }
        AnnouncedBit a = ctx.announce(i, round.z[static_cast<size_t>(i)], StepKind::Announce, step_index);
        if (a.refused) round.refused = true;
        acc ^= a.bit;
      }
      if (!round.refused) {
        if (silent_count == 0) {
          for (ParticipantId p = 1; p <= n; ++p) round.y[static_cast<size_t>(p)] = static_cast<int8_t>(acc);
        } else if (silent_count == 1) {
          round.y[static_cast<size_t>(lone_silent)] =
              static_cast<int8_t>(acc ^ round.z[static_cast<size_t>(lone_silent)]);
        }
      }
      break;
    }
  }
  return Outcome<ParityRound>::completed(std::move(round));
}

}  // namespace dcnet
