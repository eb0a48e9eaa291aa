#include <vector>

#include "doctest.h"
#include "test_support.h"
#include "wef/model.h"

namespace wef {
namespace {

Instance Intro() { return Instance({1, 1}, {{20}, {30}}); }

PaymentVector Pay(std::vector<Rational> v) { return PaymentVector(std::move(v)); }

TEST_CASE("bundle values are additive sums") {
  const Instance intro = Intro();
  const std::vector<ItemIndex> item = {0};
  CHECK(BundleValue(intro, 0, item) == 20);
  CHECK(BundleValue(intro, 1, {}) == 0);

  const Instance fractions({1}, {{Rational(1), Rational(1, 2), Rational(1, 3)}});
  const std::vector<ItemIndex> all = {0, 1, 2};
  CHECK(BundleValue(fractions, 0, all) == Rational(11, 6));

  CHECK_THROWS_AS(BundleValue(intro, 2, item), UsageError);
  const std::vector<ItemIndex> missing = {1};
  CHECK_THROWS_AS(BundleValue(intro, 0, missing), UsageError);
}

TEST_CASE("bundle value is additive over disjoint bundles") {
  Lcg64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = GenRandom(trial, 3, 6, 9, WeightMode::kIntegerRange);
    std::vector<ItemIndex> left, right, both;
    for (ItemIndex o = 0; o < 6; ++o) {
      switch (rng.Uniform(0, 2)) {
        case 0: left.push_back(o); both.push_back(o); break;
        case 1: right.push_back(o); both.push_back(o); break;
        default: break;
      }
    }
    for (AgentIndex i = 0; i < 3; ++i) {
      CHECK(BundleValue(inst, i, both) ==
            BundleValue(inst, i, left) + BundleValue(inst, i, right));
    }
  }
}

TEST_CASE("instances reject bad weights and values") {
  CHECK_THROWS_AS(Instance({0, 1}, {{1}, {1}}), UsageError);
  CHECK_THROWS_AS(Instance({1, -1}, {{1}, {1}}), UsageError);
  CHECK_THROWS_AS(Instance({1, 1}, {{1}, {-1}}), UsageError);
  CHECK_THROWS_AS(Instance({1, 1}, {{1}, {1, 2}}), UsageError);
  CHECK_THROWS_AS(Instance({1}, {{1}, {1}}), UsageError);
  CHECK_THROWS_AS(Instance({}, {}), UsageError);
  const Instance empty({1, 2}, {{}, {}});
  CHECK(empty.num_items() == 0);
  CHECK(empty.total_weight() == 3);
}

TEST_CASE("allocations must cover the instance's items") {
  const Instance intro = Intro();
  CHECK_THROWS_AS(Allocation({2}).Validate(intro), UsageError);
  CHECK_THROWS_AS(Allocation({0, 0}).Validate(intro), UsageError);
  CHECK_NOTHROW(Allocation({1}).Validate(intro));
}

TEST_CASE("WEF check on the two-agent introduction instance") {
  const Instance intro = Intro();
  const Allocation to_george({1});
  CHECK(IsWef(intro, to_george, Pay({15, -15})));
  CHECK(IsWef(intro, to_george, Pay({10, -10})));

  const auto witness = CheckWef(intro, to_george, Pay({9, -9}));
  REQUIRE(witness);
  CHECK(witness->envious == 0);
  CHECK(witness->envied == 1);
  CHECK(witness->deficit == 2);

  // Subsidies in [20, 30] and the charge of 20 to George.
  CHECK(IsWef(intro, to_george, Pay({20, 0})));
  CHECK(IsWef(intro, to_george, Pay({30, 0})));
  CHECK_FALSE(IsWef(intro, to_george, Pay({19, 0})));
  CHECK(IsWef(intro, to_george, Pay({0, -20})));

  CHECK_THROWS_AS(CheckWef(intro, to_george, Pay({1})), UsageError);
}

TEST_CASE("WEF witness reports the largest deficit, then smallest pair") {
  const Instance three({1, 1, 1}, {{0, 0}, {5, 0}, {7, 0}});
  const Allocation a({0, 0});
  // Agent 1 misses 5, agent 2 misses 7.
  const auto witness = CheckWef(three, a, PaymentVector::Zero(3));
  REQUIRE(witness);
  CHECK(witness->envious == 2);
  CHECK(witness->envied == 0);
  CHECK(witness->deficit == 7);

  const Instance tie({1, 1, 1}, {{0}, {4}, {4}});
  const auto first = CheckWef(tie, Allocation({0}), PaymentVector::Zero(3));
  REQUIRE(first);
  CHECK(first->envious == 1);
  CHECK(first->envied == 0);
}

TEST_CASE("no items and no payments is WEF") {
  const Instance empty({1, 2, 3}, {{}, {}, {}});
  CHECK(IsWef(empty, Allocation(), PaymentVector::Zero(3)));
}

TEST_CASE("classification of payment vectors") {
  auto c = Classify(Pay({10, -10}));
  CHECK(c.balanced);
  CHECK_FALSE(c.subsidy);
  c = Classify(PaymentVector::Zero(4));
  CHECK(c.balanced);
  CHECK(c.subsidy);
  CHECK(c.Label() == "balanced, subsidy");
  c = Classify(Pay({20, 0}));
  CHECK(c.subsidy);
  CHECK_FALSE(c.balanced);
  CHECK(Classify(Pay({0, -20})).Label() == "neither");

  const std::vector<AgentIndex> subset = {0, 2};
  CHECK(Pay({1, 2, 3}).SubsetSum(subset) == 4);
}

TEST_CASE("balanced vector with a negative entry has a positive entry") {
  Lcg64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    PaymentVector p = PaymentVector::Zero(4);
    for (AgentIndex i = 0; i + 1 < 4; ++i) p[i] = testing::RandomRational(rng, 5);
    p[3] = -(p[0] + p[1] + p[2]);
    REQUIRE(Classify(p).balanced);
    const bool has_negative = std::any_of(p.values.begin(), p.values.end(),
                                          [](auto& v) { return sgn(v) < 0; });
    const bool has_positive = std::any_of(p.values.begin(), p.values.end(),
                                          [](auto& v) { return sgn(v) > 0; });
    if (has_negative) CHECK(has_positive);
  }
}

TEST_CASE("WEF is invariant under adding multiples of the weights") {
  Lcg64 rng(17);
  for (const auto& pair : testing::RandomFeasiblePairs(
           150, 4, 5, WeightMode::kIntegerRange)) {
    PaymentVector p = PaymentVector::Zero(pair.instance.num_agents());
    for (auto& v : p.values) v = testing::RandomRational(rng, 12);
    const bool before = IsWef(pair.instance, pair.allocation, p);
    const Rational z = testing::RandomRational(rng, 6);
    PaymentVector shifted = p;
    for (AgentIndex i = 0; i < p.size(); ++i) {
      shifted[i] += z * pair.instance.weight(i);
    }
    CHECK(IsWef(pair.instance, pair.allocation, shifted) == before);
  }
}

}  // namespace
}  // namespace wef
