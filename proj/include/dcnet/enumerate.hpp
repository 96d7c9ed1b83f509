#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "dcnet/tape.hpp"

namespace dcnet {

// ============================================================================
// Exhaustive view enumeration
//
// Runs a protocol once per assignment of the joint randomness (a ChoiceLog
// position) and accumulates the observer-view bytes into an exact weighted
// distribution. Weights are integers scaled by 2^48 * 3^20 so distributions
// with different draw depths compare exactly; the weights of one enumeration
// always sum to the scale.
// ============================================================================

using Weight = unsigned __int128;

/// Deepest draw sequences exact weights can represent.
inline constexpr int kMaxBitDraws = 48;
inline constexpr int kMaxTernaryDraws = 20;

/// Common denominator of all leaf weights: 2^48 * 3^20.
Weight view_weight_scale();

/// Default ceiling on the number of joint assignments.
inline constexpr uint64_t kMaxLeaves = uint64_t(1) << 24;

/// Exact distribution over observer views.
struct ViewDistribution {
  std::map<std::string, Weight> weight;  ///< view bytes -> probability * scale
  uint64_t leaves = 0;                   ///< assignments enumerated
  Weight total = 0;                      ///< always view_weight_scale()
};

/// Exact equality of the weighted view distributions (leaf counts may differ
/// when the runs draw different amounts of randomness).
bool same_distribution(const ViewDistribution& a, const ViewDistribution& b);

/// One protocol run against exhaustive tapes reading from `log`; returns the
/// observer view bytes. Must be deterministic given the log and safe to call
/// concurrently on distinct logs.
using ExhaustiveRun = std::function<std::string(const std::shared_ptr<ChoiceLog>&)>;

/// Enumerates every joint assignment depth-first. Throws ConfigError once
/// the assignment count passes `max_leaves` and logic_error if the weights
/// fail to sum to the scale.
ViewDistribution enumerate_views(const ExhaustiveRun& run, uint64_t max_leaves = kMaxLeaves);

/// Same distribution, computed by partitioning the choice tree at a fixed
/// prefix depth and enumerating the subtrees in an OpenMP loop.
ViewDistribution enumerate_views_parallel(const ExhaustiveRun& run,
                                          uint64_t max_leaves = kMaxLeaves,
                                          int prefix_depth = 4);

}  // namespace dcnet
