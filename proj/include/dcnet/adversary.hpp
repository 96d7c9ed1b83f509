#pragma once

#include <cstdint>
#include <vector>

#include "dcnet/bits.hpp"

namespace dcnet {

// ============================================================================
// Static active adversary
//
// A corrupt set is fixed before the run starts, together with a strategy:
// a list of deviation rules keyed by protocol step. Deviations are applied
// by the runtime at the channel boundary, so protocol code stays honest and
// corruption cannot peek at data the protocol would not deliver.
// ============================================================================

/// Protocol step classes a deviation rule can attach to.
enum class StepKind : uint8_t {
  ShareSend,  ///< private distribution of parity shares
  Announce,   ///< one-bit announcement of a round value (any mode)
  Reveal,     ///< multi-bit reveal of stored round values
  Flip,       ///< randomized choice of a round input bit
};

/// What a corrupt participant does at a matched step.
struct Deviation {
  enum class Kind : uint8_t {
    Honest,            ///< follow the protocol
    RefuseBroadcast,   ///< announce/reveal nothing (observable refusal)
    AnnounceConstant,  ///< replace announced bits with a constant
    AnnounceRandom,    ///< replace announced bits with fresh tape bits
    OverrideFlip,      ///< flip with probability q_num/q_den regardless of input
    TamperBits,        ///< XOR emitted bits with a mask, consumed cyclically
  };
  Kind kind = Kind::Honest;
  uint8_t constant_bit = 0;
  uint32_t q_num = 0;
  uint32_t q_den = 1;
  BitString mask;

  static Deviation honest() { return {}; }
  static Deviation refuse() { return {Kind::RefuseBroadcast, 0, 0, 1, {}}; }
  static Deviation announce_constant(uint8_t b) { return {Kind::AnnounceConstant, b, 0, 1, {}}; }
  static Deviation announce_random() { return {Kind::AnnounceRandom, 0, 0, 1, {}}; }
  static Deviation override_flip(uint32_t num, uint32_t den) { return {Kind::OverrideFlip, 0, num, den, {}}; }
  static Deviation tamper_bits(BitString mask) { return {Kind::TamperBits, 0, 0, 1, std::move(mask)}; }
};

/// One strategy rule: deviation applied for a participant at matching steps.
/// who == 0 matches every corrupt participant; step_index == -1 matches any
/// sub-index (candidate, target, or phase specific index; see each protocol).
struct StrategyRule {
  ParticipantId who = 0;
  StepKind step = StepKind::Announce;
  int step_index = -1;
  Deviation deviation;
};

/// Step-keyed deviation program shared by the corrupt set.
struct AdversaryStrategy {
  std::vector<StrategyRule> rules;

  /// First matching rule, or nullptr (honest behaviour).
  const Deviation* find(ParticipantId who, StepKind step, int step_index) const {
    for (const StrategyRule& r : rules) {
      if (r.who != 0 && r.who != who) continue;
      if (r.step != step) continue;
      if (r.step_index != -1 && r.step_index != step_index) continue;
      return &r.deviation;
    }
    return nullptr;
  }

  /// Convenience: one rule for every corrupt participant at every index of
  /// the deviation's natural step kinds.
  static AdversaryStrategy uniform(const Deviation& d);
};

/// The corrupted participants and their common strategy.
struct CorruptSet {
  std::vector<ParticipantId> members;
  AdversaryStrategy strategy;

  bool empty() const { return members.empty(); }
};

/// A named strategy from the shipped library.
struct NamedStrategy {
  const char* name;
  AdversaryStrategy strategy;
};

/// Every strategy the simulator ships. Reliability tests and the acceptance
/// gate iterate this list so no strategy is added without being exercised.
std::vector<NamedStrategy> shipped_strategies();

inline AdversaryStrategy AdversaryStrategy::uniform(const Deviation& d) {
  AdversaryStrategy s;
  switch (d.kind) {
    case Deviation::Kind::Honest:
      break;
    case Deviation::Kind::OverrideFlip:
      s.rules.push_back({0, StepKind::Flip, -1, d});
      break;
    case Deviation::Kind::TamperBits:
      s.rules.push_back({0, StepKind::ShareSend, -1, d});
      s.rules.push_back({0, StepKind::Announce, -1, d});
      s.rules.push_back({0, StepKind::Reveal, -1, d});
      break;
    default:  // refusal and announcement substitutions
      s.rules.push_back({0, StepKind::Announce, -1, d});
      s.rules.push_back({0, StepKind::Reveal, -1, d});
      break;
  }
  return s;
}

}  // namespace dcnet
