#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "dcnet/outcome.hpp"
#include "dcnet/runtime.hpp"

namespace dcnet {

// ============================================================================
// Election by noisy parity counting
//
// One sub-election per candidate: s sharing rounds in which a participant
// voting for that candidate flips the round bit with probability 1/n. The
// local sums stay hidden until every round of every candidate is complete,
// then everything is revealed in one simultaneous broadcast. The fraction of
// odd rounds concentrates on a value that identifies the candidate's count
// exactly; a mismatch or an inconsistent total aborts the election.
// ============================================================================

using Rational = boost::multiprecision::cpp_rational;

/// Probability that a round's parity is odd when exactly v participants
/// each flip independently with probability 1/n: (1 - ((n-2)/n)^v) / 2.
Rational round_odd_probability(int n, int v);

/// round_odd_probability(n, v) for v = 0..n.
std::vector<Rational> round_odd_table(int n);

/// Frozen 50-digit rational truncation of e^2. Normative for decoding:
/// every comparison the decoder performs is exact against this constant.
const Rational& e_squared();

/// Decode acceptance radius 1/(2 e^2 n).
Rational decode_threshold(int n);

/// Recovers the flipper count v from an observed odd-round fraction: the
/// nearest v in 0..n with |sigma - p_v| strictly below the threshold (ties
/// toward smaller v), or nothing when no count is that close.
std::optional<int> decode_count(const Rational& sigma, int n);

/// Ballot per participant, index 1..n, values 1..m.
using VoteChoices = std::vector<int>;

/// Candidate counts, index 1..m.
struct Tally {
  std::vector<int> counts;
};

/// Accumulation phase: m*s hidden sharing rounds (candidate-major). Returns
/// per-participant local-sum strings of m*s bits (index 1..n). Flip and
/// share steps carry the candidate as their step index.
std::vector<BitString> accumulate_rounds(const VoteChoices& choices, int m, int s,
                                         RunContext& ctx);

/// Decoding phase: XORs the n revealed local-sum strings round-wise, decodes
/// each candidate's count, and checks the counts sum to n. Aborts with
/// TallyNoMatch or SumNotN.
Outcome<Tally> tally_rounds(const std::vector<BitString>& revealed, int m, int s, int n);

/// The full election: accumulate, reveal everything in one simultaneous
/// broadcast, decode. Aborts with SimBroadcastFailure, TallyNoMatch, or
/// SumNotN.
Outcome<Tally> run_vote(const VoteChoices& choices, int m, int s, RunContext& ctx);

}  // namespace dcnet
