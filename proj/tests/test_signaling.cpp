#include <algorithm>
#include <memory>
#include <stdexcept>
#include <vector>

#include "dcnet/adversary.hpp"
#include "dcnet/enumerate.hpp"
#include "dcnet/outcome.hpp"
#include "dcnet/signaling.hpp"
#include "dcnet/tape.hpp"
#include "doctest.h"

using namespace dcnet;

namespace {

int collision(const std::vector<int>& inputs, int s, uint64_t seed) {
  RunContext ctx(static_cast<int>(inputs.size()) - 1, CorruptSet{},
                 TapeSet::seeded(static_cast<int>(inputs.size()) - 1, seed),
                 Recording::Counts);
  Outcome<int> r = run_collision_detection(inputs, s, ctx);
  REQUIRE(r.is_completed());
  return r.value();
}

std::vector<std::vector<uint8_t>> no_flags(int n) {
  return std::vector<std::vector<uint8_t>>(
      static_cast<size_t>(n) + 1,
      std::vector<uint8_t>(static_cast<size_t>(n) + 1, 0));
}

ViewDistribution notify_views(const std::vector<std::vector<uint8_t>>& flags,
                              ParticipantId observer) {
  auto run = [flags, observer](const std::shared_ptr<ChoiceLog>& log) {
    CorruptSet c;
    c.members = {observer};
    RunContext ctx(3, c, TapeSet::exhaustive(3, log), Recording::View);
    auto r = run_notification(flags, 1, ctx);
    if (!r.is_completed()) throw std::logic_error("notification aborted");
    return ctx.transcript().view_buffer();
  };
  return enumerate_views_parallel(run);
}

}  // namespace

// ==== collision detection ====

TEST_CASE("sender count is reported exactly up to two") {
  // All 3^4 input vectors. The only statistical failure modes need a
  // round parity to miss 40+ times in a row, far below the trial budget.
  for (int code = 0; code < 81; ++code) {
    std::vector<int> inputs(5, 0);
    int rest = code, sum = 0;
    for (int i = 1; i <= 4; ++i) {
      inputs[i] = rest % 3;
      rest /= 3;
      sum += inputs[i];
    }
    int want = std::min(sum, 2);
    for (uint64_t seed = 0; seed < 25; ++seed) {
      if (collision(inputs, 40, seed * 131 + code) != want)
        FAIL("vector ", code, " seed ", seed);
    }
  }
}

TEST_CASE("representative sender counts") {
  CHECK(collision({0, 0, 0, 0, 0}, 40, 9) == 0);
  CHECK(collision({0, 1, 0, 0, 0}, 40, 9) == 1);
  CHECK(collision({0, 2, 0, 0, 0}, 40, 9) == 2);
  CHECK(collision({0, 1, 1, 0, 0}, 40, 9) == 2);
  CHECK(collision({0, 2, 2, 1, 1}, 40, 9) == 2);
}

TEST_CASE("no strategy stops the counting") {
  std::vector<int> inputs = {0, 1, 0, 0, 0};
  for (const NamedStrategy& named : shipped_strategies()) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      CorruptSet c;
      c.members = {2, 4};
      c.strategy = named.strategy;
      RunContext ctx(4, c, TapeSet::seeded(4, seed), Recording::Counts);
      Outcome<int> r = run_collision_detection(inputs, 20, ctx);
      CAPTURE(named.name);
      REQUIRE(r.is_completed());
      REQUIRE(r.value() >= 0);
      REQUIRE(r.value() <= 2);
    }
  }
}

TEST_CASE("a silent participant can pose as a sender") {
  // Flipping in both vetoes fakes a crowd out of thin air.
  CorruptSet c;
  c.members = {3};
  c.strategy.rules = {{3, StepKind::Flip, -1, Deviation::override_flip(1, 1)}};
  for (uint64_t seed = 0; seed < 10; ++seed) {
    RunContext ctx(4, c, TapeSet::seeded(4, seed), Recording::Counts);
    CHECK(run_collision_detection({0, 0, 0, 0, 0}, 20, ctx).value() == 2);
  }
}

TEST_CASE("step indices pin deviations to one veto") {
  // Flipping only in the second veto turns a clean single sender into a
  // reported collision; the first veto is untouched.
  CorruptSet c;
  c.members = {3};
  c.strategy.rules = {{3, StepKind::Flip, 2, Deviation::override_flip(1, 1)}};
  for (uint64_t seed = 0; seed < 10; ++seed) {
    RunContext ctx(4, c, TapeSet::seeded(4, seed), Recording::Counts);
    CHECK(run_collision_detection({0, 1, 0, 0, 0}, 20, ctx).value() == 2);
    RunContext ctx2(4, c, TapeSet::seeded(4, seed), Recording::Counts);
    CHECK(run_collision_detection({0, 0, 0, 0, 0}, 20, ctx2).value() == 0);
  }
}

TEST_CASE("collision runs are reproducible") {
  std::string first;
  for (int rep = 0; rep < 2; ++rep) {
    RunContext ctx(4, CorruptSet{}, TapeSet::seeded(4, 424242),
                   Recording::Full);
    run_collision_detection({0, 1, 2, 0, 0}, 8, ctx);
    if (rep == 0)
      first = ctx.transcript().serialize();
    else
      CHECK(first == ctx.transcript().serialize());
  }
}

TEST_CASE("collision inputs are validated") {
  RunContext ctx(4, CorruptSet{}, TapeSet::seeded(4, 1), Recording::Counts);
  CHECK_THROWS_AS(run_collision_detection({0, 1, 0, 0}, 8, ctx), ConfigError);
  CHECK_THROWS_AS(run_collision_detection({0, 3, 0, 0, 0}, 8, ctx),
                  ConfigError);
  CHECK_THROWS_AS(run_collision_detection({0, -1, 0, 0, 0}, 8, ctx),
                  ConfigError);
}

// ==== notification ====

TEST_CASE("every target learns exactly its column OR") {
  RandomTape flagsrc = RandomTape::seeded(7321);
  for (int trial = 0; trial < 1000; ++trial) {
    auto flags = no_flags(4);
    for (int j = 1; j <= 4; ++j)
      for (int i = 1; i <= 4; ++i)
        if (i != j) flags[j][i] = flagsrc.draw_bit();
    RunContext ctx(4, CorruptSet{}, TapeSet::seeded(4, 5000 + trial),
                   Recording::Counts);
    auto r = run_notification(flags, 30, ctx);
    REQUIRE(r.is_completed());
    for (int i = 1; i <= 4; ++i) {
      uint8_t want = 0;
      for (int j = 1; j <= 4; ++j) want |= flags[j][i];
      if (r.value()[i] != want) FAIL("trial ", trial, " target ", i);
    }
  }
}

TEST_CASE("no flags means no alarms ever") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    RunContext ctx(4, CorruptSet{}, TapeSet::seeded(4, seed),
                   Recording::Counts);
    auto r = run_notification(no_flags(4), 30, ctx);
    REQUIRE(r.is_completed());
    for (int i = 1; i <= 4; ++i) CHECK(r.value()[i] == 0);
  }
}

TEST_CASE("a refusal anywhere aborts the whole notification") {
  CorruptSet c;
  c.members = {2};
  c.strategy.rules = {{2, StepKind::Announce, -1, Deviation::refuse()}};
  RunContext ctx(4, c, TapeSet::seeded(4, 3), Recording::Counts);
  auto r = run_notification(no_flags(4), 10, ctx);
  REQUIRE_FALSE(r.is_completed());
  CHECK(r.reason() == AbortReason::RefusedBroadcast);

  // Scoped to the last target's rounds, it still takes everything down.
  CorruptSet late;
  late.members = {2};
  late.strategy.rules = {{2, StepKind::Announce, 4, Deviation::refuse()}};
  RunContext ctx2(4, late, TapeSet::seeded(4, 3), Recording::Counts);
  auto r2 = run_notification(no_flags(4), 10, ctx2);
  REQUIRE_FALSE(r2.is_completed());
  CHECK(r2.reason() == AbortReason::RefusedBroadcast);
}

TEST_CASE("notification flags are validated") {
  RunContext ctx(4, CorruptSet{}, TapeSet::seeded(4, 1), Recording::Counts);
  auto self = no_flags(4);
  self[2][2] = 1;
  CHECK_THROWS_AS(run_notification(self, 8, ctx), ConfigError);
  auto wide = no_flags(4);
  wide[3][1] = 2;
  CHECK_THROWS_AS(run_notification(wide, 8, ctx), ConfigError);
  auto short_rows = no_flags(3);
  CHECK_THROWS_AS(run_notification(short_rows, 8, ctx), ConfigError);
  CHECK_THROWS_AS(run_notification(no_flags(4), 0, ctx), ConfigError);
}

TEST_CASE("a target sees only the OR of the flags aimed at it") {
  auto one_three = no_flags(3);
  one_three[1][3] = 1;
  auto two_three = no_flags(3);
  two_three[2][3] = 1;
  auto both = no_flags(3);
  both[1][3] = 1;
  both[2][3] = 1;

  ViewDistribution a = notify_views(one_three, 3);
  ViewDistribution b = notify_views(two_three, 3);
  ViewDistribution c = notify_views(both, 3);
  ViewDistribution d = notify_views(no_flags(3), 3);
  CHECK(same_distribution(a, b));
  CHECK(same_distribution(a, c));
  CHECK_FALSE(same_distribution(a, d));
}

TEST_CASE("flags between others are invisible") {
  auto none = no_flags(3);
  auto one_three = no_flags(3);
  one_three[1][3] = 1;
  auto three_one = no_flags(3);
  three_one[3][1] = 1;

  ViewDistribution e = notify_views(none, 2);
  ViewDistribution f = notify_views(one_three, 2);
  ViewDistribution g = notify_views(three_one, 2);
  CHECK(same_distribution(e, f));
  CHECK(same_distribution(f, g));
}
