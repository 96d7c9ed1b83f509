#include "dcnet/veto.hpp"

#include "dcnet/enumerate.hpp"
#include "doctest.h"

using namespace dcnet;

TEST_CASE("every participant is last in exactly one ordering") {
  for (int n : {3, 5, 9}) {
    auto orderings = veto_orderings(n);
    REQUIRE(orderings.size() == static_cast<size_t>(n));
    std::vector<uint8_t> last_seen(static_cast<size_t>(n) + 1, 0);
    for (auto& ord : orderings) {
      CHECK(ord.size() == static_cast<size_t>(n));
      last_seen[static_cast<size_t>(ord.back())] += 1;
    }
    for (int i = 1; i <= n; ++i) CHECK(last_seen[static_cast<size_t>(i)] == 1);
  }
  CHECK(veto_orderings(5)[1] == std::vector<ParticipantId>{3, 4, 5, 1, 2});
}

TEST_CASE("flip randomization is one-sided") {
  RandomTape t = RandomTape::seeded(12);
  for (int i = 0; i < 64; ++i) CHECK(randomize_flip(0, t) == 0);
  int ones = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) ones += randomize_flip(1, t);
  CHECK(ones > 49525);  // mean 50000, sd ~158
  CHECK(ones < 50475);
}

static Outcome<VetoResult> veto_once(std::vector<uint8_t> inputs, int s, uint64_t seed,
                                     CorruptSet corrupt = {}) {
  int n = static_cast<int>(inputs.size()) - 1;
  RunContext ctx(n, std::move(corrupt), TapeSet::seeded(n, seed), Recording::Counts);
  return run_veto(inputs, s, ctx);
}

TEST_CASE("nobody vetoes, nobody sees a veto") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    auto r = veto_once({0, 0, 0, 0}, 3, seed);
    REQUIRE(r.is_completed());
    CHECK(r.value().result == 0);
    for (int i = 1; i <= 3; ++i) CHECK(r.value().saw_other_one[static_cast<size_t>(i)] == 0);
  }
}

TEST_CASE("a single veto is seen by everyone else and never by its caster") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    auto r = veto_once({0, 1, 0, 0, 0}, 20, seed);
    REQUIRE(r.is_completed());
    CHECK(r.value().result == 1);
    CHECK(r.value().saw_other_one[1] == 0);  // no other vetoer exists
  }
}

TEST_CASE("two vetoers detect each other") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    auto r = veto_once({0, 1, 1, 0}, 20, seed);
    REQUIRE(r.is_completed());
    CHECK(r.value().result == 1);
    CHECK(r.value().saw_other_one[1] == 1);
    CHECK(r.value().saw_other_one[2] == 1);
  }
}

TEST_CASE("refusals force a veto without stopping the run") {
  CorruptSet c;
  c.members = {2};
  c.strategy = AdversaryStrategy::uniform(Deviation::refuse());
  auto r = veto_once({0, 0, 0, 0}, 2, 5, c);
  REQUIRE(r.is_completed());
  CHECK(r.value().result == 1);
  for (int i = 1; i <= 3; ++i) CHECK(r.value().saw_other_one[static_cast<size_t>(i)] == 1);

  // The transcript runs all rounds regardless of the early refusal.
  RunContext honest(3, {}, TapeSet::seeded(3, 5), Recording::Counts);
  run_veto({0, 0, 0, 0}, 2, honest);
  RunContext refusing(3, c, TapeSet::seeded(3, 5), Recording::Counts);
  run_veto({0, 0, 0, 0}, 2, refusing);
  CHECK(honest.transcript().current_round() == refusing.transcript().current_round());
}

TEST_CASE("no shipped strategy can stop a veto from completing") {
  for (const NamedStrategy& named : shipped_strategies()) {
    for (uint64_t seed = 0; seed < 50; ++seed) {
      CorruptSet c;
      c.members = {2, 4};
      c.strategy = named.strategy;
      RunContext ctx(4, c, TapeSet::seeded(4, seed), Recording::Counts);
      auto r = run_veto({0, 1, 0, 0, 0}, 4, ctx);
      CHECK(r.is_completed());
    }
  }
}

TEST_CASE("flip overrides change the veto rate") {
  CorruptSet c;
  c.members = {1};
  c.strategy = AdversaryStrategy::uniform(Deviation::override_flip(1, 1));
  // Input 0 but the override flips every round: result 1 always.
  auto r = veto_once({0, 0, 0, 0}, 2, 9, c);
  REQUIRE(r.is_completed());
  CHECK(r.value().result == 1);
}

// Corrupt participant 3's exact view distribution at s=1, honest behavior.
static ViewDistribution veto_views(std::vector<uint8_t> inputs) {
  auto run = [inputs](const std::shared_ptr<ChoiceLog>& log) {
    CorruptSet c;
    c.members = {3};
    RunContext ctx(3, c, TapeSet::exhaustive(3, log), Recording::View);
    auto r = run_veto(inputs, 1, ctx);
    if (!r.is_completed()) throw std::logic_error("veto aborted");
    return ctx.transcript().view_buffer();
  };
  return enumerate_views_parallel(run);
}

TEST_CASE("an observer learns the veto outcome but never the vetoer") {
  ViewDistribution d10 = veto_views({0, 1, 0, 0});
  ViewDistribution d01 = veto_views({0, 0, 1, 0});
  CHECK(same_distribution(d10, d01));

  ViewDistribution d00 = veto_views({0, 0, 0, 0});
  CHECK(!same_distribution(d00, d10));

  // Views depend on the inputs only through the presence of a veto.
  ViewDistribution d11 = veto_views({0, 1, 1, 0});
  CHECK(same_distribution(d11, d10));
}
