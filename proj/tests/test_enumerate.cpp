#include "dcnet/enumerate.hpp"

#include "dcnet/parity.hpp"
#include "doctest.h"

using namespace dcnet;

TEST_CASE("the weight scale is 2^48 * 3^20") {
  Weight expect = 1;
  for (int i = 0; i < 48; ++i) expect *= 2;
  for (int i = 0; i < 20; ++i) expect *= 3;
  CHECK(view_weight_scale() == expect);
}

TEST_CASE("leaf weights reflect draw depth exactly") {
  // One bit draw; on 1 an extra ternary draw. Leaves: "0" (w=1/2),
  // "1x" for x in 0..2 (w=1/6 each).
  auto run = [](const std::shared_ptr<ChoiceLog>& log) {
    std::string view;
    uint32_t a = log->draw(2);
    view += static_cast<char>('0' + a);
    if (a == 1) view += static_cast<char>('0' + log->draw(3));
    return view;
  };
  ViewDistribution d = enumerate_views(run);
  CHECK(d.leaves == 4);
  CHECK(d.total == view_weight_scale());
  CHECK(d.weight.at("0") == view_weight_scale() / 2);
  CHECK(d.weight.at("10") == view_weight_scale() / 6);
  CHECK(d.weight.at("12") == view_weight_scale() / 6);
}

TEST_CASE("distributions compare by weight, not by leaf count") {
  // A fair bit drawn one way vs. two redundant draws collapsing to one bit.
  auto one = [](const std::shared_ptr<ChoiceLog>& log) {
    return std::string(1, static_cast<char>('0' + log->draw(2)));
  };
  auto two = [](const std::shared_ptr<ChoiceLog>& log) {
    uint32_t a = log->draw(2);
    log->draw(2);  // consumed, never observed
    return std::string(1, static_cast<char>('0' + a));
  };
  ViewDistribution d1 = enumerate_views(one);
  ViewDistribution d2 = enumerate_views(two);
  CHECK(d1.leaves == 2);
  CHECK(d2.leaves == 4);
  CHECK(same_distribution(d1, d2));

  auto biased = [](const std::shared_ptr<ChoiceLog>& log) {
    return std::string(1, static_cast<char>('0' + (log->draw(3) == 0 ? 0 : 1)));
  };
  CHECK(!same_distribution(d1, enumerate_views(biased)));
}

TEST_CASE("assignment and depth limits are enforced") {
  auto four_bits = [](const std::shared_ptr<ChoiceLog>& log) {
    for (int i = 0; i < 4; ++i) log->draw(2);
    return std::string("x");
  };
  CHECK_THROWS_AS(enumerate_views(four_bits, 8), ConfigError);
  CHECK(enumerate_views(four_bits, 16).leaves == 16);

  auto too_deep = [](const std::shared_ptr<ChoiceLog>& log) {
    for (int i = 0; i < kMaxBitDraws + 1; ++i) log->draw(2);
    return std::string("x");
  };
  CHECK_THROWS_AS(enumerate_views(too_deep), ConfigError);

  auto too_ternary = [](const std::shared_ptr<ChoiceLog>& log) {
    for (int i = 0; i < kMaxTernaryDraws + 1; ++i) log->draw(3);
    return std::string("x");
  };
  CHECK_THROWS_AS(enumerate_views(too_ternary), ConfigError);
}

static ViewDistribution parity_views(std::vector<uint8_t> inputs, bool parallel) {
  auto run = [inputs](const std::shared_ptr<ChoiceLog>& log) {
    CorruptSet c;
    c.members = {3};
    RunContext ctx(3, c, TapeSet::exhaustive(3, log), Recording::View);
    auto r = run_parity(inputs, AnnouncementMode::sequential({1, 2, 3}), ctx);
    REQUIRE(r.is_completed());
    return ctx.transcript().view_buffer();
  };
  return parallel ? enumerate_views_parallel(run) : enumerate_views(run);
}

TEST_CASE("parallel enumeration reproduces the serial distribution exactly") {
  ViewDistribution serial = parity_views({0, 1, 0, 1}, false);
  ViewDistribution parallel = parity_views({0, 1, 0, 1}, true);
  CHECK(serial.leaves == parallel.leaves);
  CHECK(serial.total == parallel.total);
  CHECK(serial.weight == parallel.weight);
  CHECK(serial.leaves == 64);
}

TEST_CASE("prefix partitioning survives shallow and uneven trees") {
  // Depth 4 partitioning of a tree of depth 2.
  auto shallow = [](const std::shared_ptr<ChoiceLog>& log) {
    std::string v;
    v += static_cast<char>('0' + log->draw(2));
    v += static_cast<char>('0' + log->draw(2));
    return v;
  };
  ViewDistribution d = enumerate_views_parallel(shallow, kMaxLeaves, 4);
  CHECK(d.leaves == 4);
  CHECK(d.weight.size() == 4);
  CHECK(d.weight.at("11") == view_weight_scale() / 4);

  // Branch-dependent depth.
  auto uneven = [](const std::shared_ptr<ChoiceLog>& log) {
    std::string v;
    if (log->draw(2) == 0) return std::string("z");
    for (int i = 0; i < 6; ++i) v += static_cast<char>('0' + log->draw(2));
    return v;
  };
  ViewDistribution ds = enumerate_views(uneven);
  ViewDistribution dp = enumerate_views_parallel(uneven, kMaxLeaves, 3);
  CHECK(same_distribution(ds, dp));
  CHECK(ds.leaves == dp.leaves);
  CHECK(ds.weight.at("z") == view_weight_scale() / 2);
}
