#include "dcnet/runtime.hpp"

namespace dcnet {

void require_participants(int n) {
  if (n < 3) throw ConfigError("participant count must be at least 3");
  if (n > 250) throw ConfigError("participant count must be at most 250");
}

RunContext::RunContext(int n, CorruptSet corrupt, TapeSet tapes, Recording recording)
    : n_(n), corrupt_(std::move(corrupt)), tapes_(std::move(tapes)), transcript_(n, recording) {
  require_participants(n);
  corrupt_flags_.assign(static_cast<size_t>(n) + 1, 0);
  for (ParticipantId id : corrupt_.members) {
    if (id < 1 || id > n) throw ConfigError("corrupt participant id out of range");
    corrupt_flags_[static_cast<size_t>(id)] = 1;
  }
  tamper_cursor_.assign(static_cast<size_t>(n) + 1, 0);
  if (recording == Recording::View) transcript_.set_observers(corrupt_flags_);
}

const Deviation* RunContext::deviation(ParticipantId who, StepKind step, int step_index) const {
  if (!is_corrupt(who)) return nullptr;
  return corrupt_.strategy.find(who, step, step_index);
}

uint8_t RunContext::tamper_next(ParticipantId who, const Deviation& d, uint8_t bit) {
  if (d.mask.empty()) return bit;
  size_t& cur = tamper_cursor_[static_cast<size_t>(who)];
  uint8_t m = d.mask[cur % d.mask.size()];
  ++cur;
  return bit ^ m;
}

uint8_t RunContext::send_private_bit(ParticipantId from, ParticipantId to, uint8_t bit,
                                     StepKind step, int step_index) {
  const Deviation* d = deviation(from, step, step_index);
  if (d && d->kind == Deviation::Kind::TamperBits) bit = tamper_next(from, *d, bit);
  transcript_.record_private_bit(from, to, bit);
  return bit;
}

BitString RunContext::send_private(ParticipantId from, ParticipantId to, const BitString& payload,
                                   StepKind step, int step_index) {
  const Deviation* d = deviation(from, step, step_index);
  BitString out = payload;
  if (d && d->kind == Deviation::Kind::TamperBits)
    for (uint8_t& b : out) b = tamper_next(from, *d, b);
  transcript_.record_private(from, to, out);
  return out;
}

AnnouncedBit RunContext::announce(ParticipantId from, uint8_t honest_bit,
                                              StepKind step, int step_index) {
  const Deviation* d = deviation(from, step, step_index);
  uint8_t bit = honest_bit;
  if (d) {
    switch (d->kind) {
      case Deviation::Kind::RefuseBroadcast:
        transcript_.record_broadcast_bit(from, 0, true);
        return {0, true};
      case Deviation::Kind::AnnounceConstant: bit = d->constant_bit; break;
      case Deviation::Kind::AnnounceRandom: bit = tape(from).draw_bit(); break;
      case Deviation::Kind::TamperBits: bit = tamper_next(from, *d, bit); break;
      default: break;
    }
  }
  transcript_.record_broadcast_bit(from, bit, false);
  return {bit, false};
}

AnnouncedBit RunContext::announce_private(ParticipantId from, ParticipantId to,
                                                      uint8_t honest_bit, StepKind step,
                                                      int step_index) {
  const Deviation* d = deviation(from, step, step_index);
  uint8_t bit = honest_bit;
  if (d) {
    switch (d->kind) {
      case Deviation::Kind::RefuseBroadcast:
        // Nothing is sent; the due message's absence is observable to `to`.
        return {0, true};
      case Deviation::Kind::AnnounceConstant: bit = d->constant_bit; break;
      case Deviation::Kind::AnnounceRandom: bit = tape(from).draw_bit(); break;
      case Deviation::Kind::TamperBits: bit = tamper_next(from, *d, bit); break;
      default: break;
    }
  }
  transcript_.record_private_bit(from, to, bit);
  return {bit, false};
}

Revealed RunContext::reveal_private(ParticipantId from, ParticipantId to,
                                                const BitString& honest_bits, int step_index) {
  const Deviation* d = deviation(from, StepKind::Reveal, step_index);
  BitString bits = honest_bits;
  if (d) {
    switch (d->kind) {
      case Deviation::Kind::RefuseBroadcast:
        return {{}, true};
      case Deviation::Kind::AnnounceConstant:
        bits.assign(bits.size(), d->constant_bit);
        break;
      case Deviation::Kind::AnnounceRandom: {
        bits.clear();
        tape(from).draw_bits(honest_bits.size(), bits);
        break;
      }
      case Deviation::Kind::TamperBits:
        for (uint8_t& b : bits) b = tamper_next(from, *d, b);
        break;
      default: break;
    }
  }
  transcript_.record_private(from, to, bits);
  return {std::move(bits), false};
}

Revealed RunContext::reveal_broadcast(ParticipantId from, const BitString& honest_bits,
                                                  int step_index) {
  const Deviation* d = deviation(from, StepKind::Reveal, step_index);
  BitString bits = honest_bits;
  if (d) {
    switch (d->kind) {
      case Deviation::Kind::RefuseBroadcast:
        transcript_.record_broadcast(from, {}, true);
        return {{}, true};
      case Deviation::Kind::AnnounceConstant:
        bits.assign(bits.size(), d->constant_bit);
        break;
      case Deviation::Kind::AnnounceRandom: {
        bits.clear();
        tape(from).draw_bits(honest_bits.size(), bits);
        break;
      }
      case Deviation::Kind::TamperBits:
        for (uint8_t& b : bits) b = tamper_next(from, *d, b);
        break;
      default: break;
    }
  }
  transcript_.record_broadcast(from, bits, false);
  return {std::move(bits), false};
}

SimBroadcastResult RunContext::simultaneous_broadcast(
    const std::vector<BitString>& honest_contributions, StepKind step, int step_index) {
  SimBroadcastResult out;
  out.revealed.resize(static_cast<size_t>(n_) + 1);
  out.missing.assign(static_cast<size_t>(n_) + 1, 0);

  // Collect phase: each contribution is fixed using only the contributor's
  // own pending bits and tape. No honest contribution is readable here.
  for (ParticipantId i = 1; i <= n_; ++i) {
    const BitString& honest = honest_contributions[static_cast<size_t>(i)];
    const Deviation* d = deviation(i, step, step_index);
    if (!d) {
      out.revealed[static_cast<size_t>(i)] = honest;
      continue;
    }
    switch (d->kind) {
      case Deviation::Kind::RefuseBroadcast:
        out.missing[static_cast<size_t>(i)] = 1;
        out.any_missing = true;
        break;
      case Deviation::Kind::AnnounceConstant:
        out.revealed[static_cast<size_t>(i)].assign(honest.size(), d->constant_bit);
        break;
      case Deviation::Kind::AnnounceRandom:
        tape(i).draw_bits(honest.size(), out.revealed[static_cast<size_t>(i)]);
        break;
      case Deviation::Kind::TamperBits: {
        BitString bits = honest;
        for (uint8_t& b : bits) b = tamper_next(i, *d, b);
        out.revealed[static_cast<size_t>(i)] = std::move(bits);
        break;
      }
      default:
        out.revealed[static_cast<size_t>(i)] = honest;
        break;
    }
  }

  // Reveal phase.
  for (ParticipantId i = 1; i <= n_; ++i)
    transcript_.record_sim_reveal(i, out.revealed[static_cast<size_t>(i)],
                                  out.missing[static_cast<size_t>(i)] != 0);
  return out;
}

uint8_t RunContext::flip(ParticipantId who, uint8_t input, uint32_t num, uint32_t den,
                         int step_index) {
  const Deviation* d = deviation(who, StepKind::Flip, step_index);
  if (d && d->kind == Deviation::Kind::OverrideFlip)
    return tape(who).draw_bool(d->q_num, d->q_den) ? 1 : 0;
  if (input == 0) return 0;
  return tape(who).draw_bool(num, den) ? 1 : 0;
}

}  // namespace dcnet
