#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcnet/adversary.hpp"
#include "dcnet/amt.hpp"
#include "dcnet/anon_bit.hpp"
#include "dcnet/bits.hpp"
#include "dcnet/sweep.hpp"

namespace dcnet {

// ============================================================================
// Scenario runner
//
// A scenario is a whitespace-separated list of key=value tokens ('#' starts
// a comment). Keys: protocol, n, s, m, inputs, corrupt, seed, trials.
// `inputs` is comma-separated, one entry per participant, with `_` for "no
// input here"; payloads are hex. `corrupt` is
// <ids>:<strategy>[(args)][@<step>[:<index>]].
// ============================================================================

enum class Protocol : uint8_t {
  Parity,
  Veto,
  Vote,
  Abt,
  Collision,
  Notify,
  Framt,
  Amt,
};

const char* to_string(Protocol p);

/// Parse or validation failure; line is 1-based, 0 when no line applies.
struct ScenarioError : std::runtime_error {
  int line;
  ScenarioError(int line_no, const std::string& what);
};

struct Scenario {
  Protocol protocol = Protocol::Parity;
  int n = 0;
  int s = 0;  ///< rounds; unused by parity
  int m = 0;  ///< vote candidates / message bits; unused elsewhere
  uint64_t seed = 0;
  int trials = 1;
  std::string corrupt_text;  ///< canonical echo for reports; empty = honest
  CorruptSet corrupt;

  BitString bits;                           ///< parity, veto
  std::vector<int> numbers;                 ///< vote ballots, collision counts
  std::vector<std::vector<uint8_t>> flags;  ///< notify
  std::vector<std::vector<AbtCell>> cells;  ///< abt
  std::vector<AmtInput> intents;            ///< framt, amt
};

/// Parses and fully validates one scenario document.
Scenario parse_scenario(const std::string& text);

struct RunReport {
  Scenario scenario;
  std::vector<TrialRecord> trials;
  SweepSummary summary;
  double seconds = 0.0;

  bool all_completed() const { return summary.aborted == 0; }
};

/// One seeded trial of the scenario's protocol.
TrialRecord run_scenario_trial(const Scenario& scenario, int index,
                               uint64_t seed);

/// Runs scenario.trials trials with seeds seed, seed+1, ...
RunReport execute(const Scenario& scenario, bool parallel = false,
                  int workers = 0);

/// Renderings. Each ends with a `time` line, the only line that varies
/// between runs of an identical scenario.
std::string render_text(const RunReport& report);
std::string render_records(const RunReport& report);
std::string render_stats_csv(const RunReport& report);

}  // namespace dcnet
