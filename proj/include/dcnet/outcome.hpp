#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace dcnet {

/// Raised for invalid configurations (bad participant counts, malformed
/// inputs, oversized exhaustive enumerations). Always thrown before any
/// protocol round executes.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed set of abort causes. Every abort a protocol can produce names the
/// step that failed; there is no catch-all.
enum class AbortReason : uint8_t {
  None,                 ///< not aborted
  SimBroadcastFailure,  ///< missing contribution in a simultaneous broadcast
  RefusedBroadcast,     ///< a participant refused an attributed broadcast
  TallyNoMatch,         ///< a tally fraction matched no candidate count
  SumNotN,              ///< decoded candidate counts do not sum to n
  VetoTriggered,        ///< a final veto reported 1
};

const char* to_string(AbortReason r);

/// Result of a protocol run: either a completed value or an abort reason.
template <typename T>
class Outcome {
 public:
  static Outcome completed(T value) {
    Outcome o;
    o.value_ = std::move(value);
    return o;
  }
  static Outcome aborted(AbortReason reason) {
    Outcome o;
    o.reason_ = reason;
    return o;
  }

  bool is_completed() const { return value_.has_value(); }
  AbortReason reason() const { return reason_; }
  const T& value() const { return *value_; }
  T& value() { return *value_; }

 private:
  std::optional<T> value_;
  AbortReason reason_ = AbortReason::None;
};

inline const char* to_string(AbortReason r) {
  switch (r) {
    case AbortReason::None: return "none";
    case AbortReason::SimBroadcastFailure: return "sim_broadcast_failure";
    case AbortReason::RefusedBroadcast: return "refused_broadcast";
    case AbortReason::TallyNoMatch: return "tally_no_match";
    case AbortReason::SumNotN: return "sum_not_n";
    case AbortReason::VetoTriggered: return "veto_triggered";
  }
  return "unknown";
}

}  // namespace dcnet
