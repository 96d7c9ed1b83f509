#include "dcnet/sweep.hpp"

#include <omp.h>

namespace dcnet {

bool operator==(const TrialRecord& a, const TrialRecord& b) {
  return a.index == b.index && a.seed == b.seed && a.completed == b.completed &&
         a.reason == b.reason && a.value == b.value && a.rounds == b.rounds &&
         a.bits == b.bits;
}

std::vector<TrialRecord> run_trials(const TrialRunner& runner,
                                    uint64_t first_seed, int trials) {
  if (trials < 0) throw ConfigError("trial count must be non-negative");
  std::vector<TrialRecord> out(static_cast<size_t>(trials));
  for (int k = 0; k < trials; ++k)
    out[static_cast<size_t>(k)] = runner(k, first_seed + static_cast<uint64_t>(k));
  return out;
}

std::vector<TrialRecord> run_trials_parallel(const TrialRunner& runner,
                                             uint64_t first_seed, int trials,
                                             int workers) {
  if (trials < 0) throw ConfigError("trial count must be non-negative");
  std::vector<TrialRecord> out(static_cast<size_t>(trials));
#pragma omp parallel for schedule(dynamic) num_threads(workers > 0 ? workers : omp_get_max_threads())
  for (int k = 0; k < trials; ++k)
    out[static_cast<size_t>(k)] = runner(k, first_seed + static_cast<uint64_t>(k));
  return out;
}

SweepSummary summarize(const std::vector<TrialRecord>& records) {
  SweepSummary s;
  for (const TrialRecord& r : records) {
    if (r.completed) {
      ++s.completed;
      ++s.values[r.value];
    } else {
      ++s.aborted;
      ++s.reasons[r.reason];
    }
  }
  return s;
}

}  // namespace dcnet
