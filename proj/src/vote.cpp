#include "dcnet/vote.hpp"

#include <map>
#include <mutex>

#include "dcnet/parity.hpp"

namespace dcnet {

using boost::multiprecision::cpp_int;

Rational round_odd_probability(int n, int v) {
  require_participants(n);
  if (v < 0 || v > n) throw ConfigError("flipper count out of range");
  // (1 - ((n-2)/n)^v) / 2
  cpp_int num = pow(cpp_int(n - 2), static_cast<unsigned>(v));
  cpp_int den = pow(cpp_int(n), static_cast<unsigned>(v));
  return Rational(den - num, 2 * den);
}

std::vector<Rational> round_odd_table(int n) {
  require_participants(n);
  std::vector<Rational> table;
  table.reserve(static_cast<size_t>(n) + 1);
  Rational ratio(n - 2, n);
  Rational power = 1;
  for (int v = 0; v <= n; ++v) {
    table.emplace_back(Rational(1 - power) / 2);
    power *= ratio;
  }
  return table;
}

const Rational& e_squared() {
  static const Rational e2(
      cpp_int("738905609893065022723042746057500781318031557055184"),
      pow(cpp_int(10), 50));
  return e2;
}

Rational decode_threshold(int n) {
  return Rational(1) / (2 * e_squared() * n);
}

namespace {

// Tables are immutable once built; map nodes stay put across inserts.
const std::vector<Rational>& cached_round_odd_table(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Rational>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, round_odd_table(n)).first;
  return it->second;
}

}  // namespace

std::optional<int> decode_count(const Rational& sigma, int n) {
  require_participants(n);
  if (sigma < 0 || sigma > 1) throw ConfigError("odd-round fraction must lie in [0,1]");
  const std::vector<Rational>& table = cached_round_odd_table(n);

  // The table is strictly increasing: binary-search the insertion point and
  // compare the two neighbors. Nearest within the radius wins, ties toward
  // the smaller count. All comparisons cross-multiply; rational operators
  // are much slower at these operand sizes.
  const cpp_int& sn = numerator(sigma);
  const cpp_int& sd = denominator(sigma);
  int lo = 0;
  int hi = n;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    const Rational& p = table[static_cast<size_t>(mid)];
    if (numerator(p) * sd < sn * denominator(p)) lo = mid + 1;
    else hi = mid;
  }
  Rational radius = decode_threshold(n);
  const cpp_int& rn = numerator(radius);
  const cpp_int& rd = denominator(radius);
  std::optional<int> best;
  cpp_int best_num;
  cpp_int best_den;
  for (int v : {lo - 1, lo}) {
    if (v < 0 || v > n) continue;
    const Rational& p = table[static_cast<size_t>(v)];
    cpp_int dist_num = abs(sn * denominator(p) - numerator(p) * sd);
    cpp_int dist_den = sd * denominator(p);
    if (dist_num * rd >= rn * dist_den) continue;
    if (!best || dist_num * best_den < best_num * dist_den) {
      best = v;
      best_num = std::move(dist_num);
      best_den = std::move(dist_den);
    }
  }
  return best;
}

std::vector<BitString> accumulate_rounds(const VoteChoices& choices, int m, int s,
                                         RunContext& ctx) {
  const int n = ctx.n();
  if (choices.size() != static_cast<size_t>(n) + 1) throw ConfigError("ballots must be indexed 1..n");
  if (m < 2) throw ConfigError("an election needs at least 2 candidates");
  if (s < 1) throw ConfigError("repetition count must be at least 1");
  for (ParticipantId i = 1; i <= n; ++i) {
    int c = choices[static_cast<size_t>(i)];
    if (c < 1 || c > m) throw ConfigError("ballot outside the candidate range");
  }

  std::vector<ParticipantId> everyone;
  for (ParticipantId i = 1; i <= n; ++i) everyone.push_back(i);
  AnnouncementMode hidden = AnnouncementMode::withheld(everyone, n);

  std::vector<BitString> sums(static_cast<size_t>(n) + 1);
  for (ParticipantId i = 1; i <= n; ++i)
    sums[static_cast<size_t>(i)].reserve(static_cast<size_t>(m) * static_cast<size_t>(s));

  std::vector<uint8_t> flips(static_cast<size_t>(n) + 1, 0);
  for (int k = 1; k <= m; ++k) {
    for (int j = 0; j < s; ++j) {
      for (ParticipantId i = 1; i <= n; ++i) {
        uint8_t in = choices[static_cast<size_t>(i)] == k ? 1 : 0;
        flips[static_cast<size_t>(i)] = ctx.flip(i, in, 1, static_cast<uint32_t>(n), k);
      }
      Outcome<ParityRound> round = run_parity(flips, hidden, ctx, k);
      for (ParticipantId i = 1; i <= n; ++i)
        sums[static_cast<size_t>(i)].push_back(round.value().z[static_cast<size_t>(i)]);
    }
  }
  return sums;
}

Outcome<Tally> tally_rounds(const std::vector<BitString>& revealed, int m, int s, int n) {
  Tally tally;
  tally.counts.assign(static_cast<size_t>(m) + 1, 0);
  int total = 0;
  for (int k = 1; k <= m; ++k) {
    int odd = 0;
    for (int j = 0; j < s; ++j) {
      size_t idx = static_cast<size_t>(k - 1) * static_cast<size_t>(s) + static_cast<size_t>(j);
      uint8_t y = 0;
      for (ParticipantId i = 1; i <= n; ++i) y ^= revealed[static_cast<size_t>(i)][idx];
      odd += y;
    }
    std::optional<int> v = decode_count(Rational(odd, s), n);
    if (!v) return Outcome<Tally>::aborted(AbortReason::TallyNoMatch);
    tally.counts[static_cast<size_t>(k)] = *v;
    total += *v;
  }
  if (total != n) return Outcome<Tally>::aborted(AbortReason::SumNotN);
  return Outcome<Tally>::completed(std::move(tally));
}

Outcome<Tally> run_vote(const VoteChoices& choices, int m, int s, RunContext& ctx) {
  const int n = ctx.n();
  std::vector<BitString> sums = accumulate_rounds(choices, m, s, ctx);

  ctx.begin_round();
  SimBroadcastResult reveal = ctx.simultaneous_broadcast(sums, StepKind::Reveal);
  if (reveal.any_missing) return Outcome<Tally>::aborted(AbortReason::SimBroadcastFailure);
  return tally_rounds(reveal.revealed, m, s, n);
}

}  // namespace dcnet
