#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dcnet/outcome.hpp"

namespace dcnet {

// ============================================================================
// Trial sweeps
//
// Many independently seeded runs of one configuration. Trials share no
// state, so the parallel driver spreads them over an OpenMP loop; the
// serial driver is the reference the tests compare it against.
// ============================================================================

/// One trial, rendered protocol-independently.
struct TrialRecord {
  int index = 0;
  uint64_t seed = 0;
  bool completed = false;
  AbortReason reason = AbortReason::None;
  std::string value;  ///< stable rendering of the outcome value; "-" if aborted
  uint32_t rounds = 0;
  uint64_t bits = 0;
};

bool operator==(const TrialRecord& a, const TrialRecord& b);

/// Runs one seeded trial. Must be a pure function of (index, seed).
using TrialRunner = std::function<TrialRecord(int index, uint64_t seed)>;

/// Serial reference driver: trial k gets seed first_seed + k.
std::vector<TrialRecord> run_trials(const TrialRunner& runner,
                                    uint64_t first_seed, int trials);

/// Same seeds, OpenMP loop. workers <= 0 keeps the runtime default.
std::vector<TrialRecord> run_trials_parallel(const TrialRunner& runner,
                                             uint64_t first_seed, int trials,
                                             int workers = 0);

/// Aggregate counts over a sweep.
struct SweepSummary {
  int completed = 0;
  int aborted = 0;
  std::map<AbortReason, int> reasons;  ///< aborted trials by reason
  std::map<std::string, int> values;   ///< completed trials by value
};

SweepSummary summarize(const std::vector<TrialRecord>& records);

}  // namespace dcnet
