#include "dcnet/amt.hpp"

#include <utility>

#include "dcnet/amd.hpp"
#include "dcnet/parity.hpp"
#include "dcnet/signaling.hpp"
#include "dcnet/veto.hpp"

namespace dcnet {
namespace {

// Round j announces starting at participant ((j - 1) mod n) + 1.
std::vector<ParticipantId> rotated_order(int n, int round) {
  std::vector<ParticipantId> order(n);
  int start = (round - 1) % n;
  for (int k = 0; k < n; ++k) order[k] = (start + k) % n + 1;
  return order;
}

}  // namespace

const char* to_string(AmtResultKind k) {
  switch (k) {
    case AmtResultKind::NoTransmission: return "no_transmission";
    case AmtResultKind::Collision: return "collision";
    case AmtResultKind::Delivered: return "delivered";
  }
  return "?";
}

Outcome<AmtDeliveries> run_amt_rounds(const std::vector<BitString>& messages,
                                      const std::vector<uint8_t>& receiving,
                                      int message_bits, int s,
                                      RunContext& ctx) {
  int n = ctx.n();
  if (s < 1) throw ConfigError("round count must be positive");
  if (static_cast<int>(messages.size()) != n + 1 ||
      static_cast<int>(receiving.size()) != n + 1)
    throw ConfigError("role vectors need one slot per participant");

  AmdParams params = amd_params(message_bits, s);
  int len = params.codeword_bits();

  std::vector<BitString> codewords(n + 1);
  for (int i = 1; i <= n; ++i) {
    if (messages[i].empty()) continue;
    if (static_cast<int>(messages[i].size()) != message_bits)
      throw ConfigError("message length does not match the protocol");
    codewords[i] = amd_encode(messages[i], params, ctx.tape(i));
  }

  std::vector<BitString> unmasked(n + 1);
  for (int i = 1; i <= n; ++i)
    if (receiving[i]) unmasked[i].reserve(len);

  for (int j = 1; j <= len; ++j) {
    BitString x(n + 1, 0);
    std::vector<uint8_t> pad(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      if (!codewords[i].empty()) x[i] ^= codewords[i][j - 1];
      if (receiving[i]) {
        pad[i] = ctx.tape(i).draw_bit();
        x[i] ^= pad[i];
      }
    }
    ParityRound r =
        run_parity(x, AnnouncementMode::sequential(rotated_order(n, j)), ctx, j)
            .value();
    for (int i = 1; i <= n; ++i) {
      if (!receiving[i]) continue;
      uint8_t out = (!r.refused && r.learned(i))
                        ? static_cast<uint8_t>(r.y[i])
                        : 0;
      unmasked[i].push_back(out ^ pad[i]);
    }
  }

  AmtDeliveries decoded(n + 1);
  std::vector<uint8_t> failed(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (!receiving[i]) continue;
    std::optional<BitString> y = amd_decode(unmasked[i], params);
    if (y)
      decoded[i] = std::move(*y);
    else
      failed[i] = 1;
  }
  VetoResult veto = run_veto(failed, s, ctx, 0).value();
  if (veto.result)
    return Outcome<AmtDeliveries>::aborted(AbortReason::VetoTriggered);
  return Outcome<AmtDeliveries>::completed(std::move(decoded));
}

Outcome<BitString> run_fixed_role_amt(ParticipantId sender,
                                      ParticipantId receiver,
                                      const BitString& message, int s,
                                      RunContext& ctx) {
  int n = ctx.n();
  if (sender < 1 || sender > n || receiver < 1 || receiver > n)
    throw ConfigError("sender and receiver must be participants");
  if (sender == receiver) throw ConfigError("sender and receiver must differ");
  if (message.empty()) throw ConfigError("message must hold at least one bit");

  std::vector<BitString> messages(n + 1);
  messages[sender] = message;
  std::vector<uint8_t> receiving(n + 1, 0);
  receiving[receiver] = 1;
  Outcome<AmtDeliveries> r = run_amt_rounds(
      messages, receiving, static_cast<int>(message.size()), s, ctx);
  if (!r.is_completed()) return Outcome<BitString>::aborted(r.reason());
  BitString out;
  if (r.value()[receiver]) out = std::move(*r.value()[receiver]);
  return Outcome<BitString>::completed(std::move(out));
}

Outcome<AmtResult> run_amt(const std::vector<AmtInput>& inputs,
                           int message_bits, int s, RunContext& ctx) {
  int n = ctx.n();
  if (static_cast<int>(inputs.size()) != n + 1)
    throw ConfigError("one intent per participant");
  if (message_bits < 1) throw ConfigError("message must hold at least one bit");
  for (int i = 1; i <= n; ++i) {
    if (!inputs[i].sending()) continue;
    if (inputs[i].receiver < 1 || inputs[i].receiver > n)
      throw ConfigError("receiver must be a participant");
    if (inputs[i].receiver == i) throw ConfigError("self-delivery is not allowed");
    if (static_cast<int>(inputs[i].message.size()) != message_bits)
      throw ConfigError("message length does not match the protocol");
  }

  std::vector<int> claims(n + 1, 0);
  for (int i = 1; i <= n; ++i) claims[i] = inputs[i].sending() ? 1 : 0;
  int senders = run_collision_detection(claims, s, ctx).value();
  if (senders == 0)
    return Outcome<AmtResult>::completed({AmtResultKind::NoTransmission, {}});
  if (senders == 2)
    return Outcome<AmtResult>::completed({AmtResultKind::Collision, {}});

  std::vector<std::vector<uint8_t>> flags(n + 1,
                                          std::vector<uint8_t>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    if (inputs[i].sending()) flags[i][inputs[i].receiver] = 1;
  Outcome<std::vector<uint8_t>> notified = run_notification(flags, s, ctx);
  if (!notified.is_completed())
    return Outcome<AmtResult>::aborted(notified.reason());

  std::vector<BitString> messages(n + 1);
  for (int i = 1; i <= n; ++i)
    if (inputs[i].sending()) messages[i] = inputs[i].message;
  Outcome<AmtDeliveries> delivered =
      run_amt_rounds(messages, notified.value(), message_bits, s, ctx);
  if (!delivered.is_completed())
    return Outcome<AmtResult>::aborted(delivered.reason());
  return Outcome<AmtResult>::completed(
      {AmtResultKind::Delivered, std::move(delivered.value())});
}

}  // namespace dcnet
