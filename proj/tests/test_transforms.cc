#include "doctest.h"
#include "test_support.h"
#include "wef/envy_graph.h"
#include "wef/transforms.h"

namespace wef {
namespace {

PaymentVector Pay(std::vector<Rational> v) { return PaymentVector(std::move(v)); }

const Instance kTwo({1, 1}, {{20}, {30}});
const Instance kThree({1, 1, 1}, {{6}, {6}, {6}});

TEST_CASE("slide examples") {
  CHECK(Slide(kTwo, Pay({20, 0}), 10) == Pay({10, -10}));
  CHECK(Slide(kTwo, Pay({3, Rational(-1, 2)}), 0) == Pay({3, Rational(-1, 2)}));
  CHECK(Slide(kThree, Pay({0, 6, 6}), -1) == Pay({1, 7, 7}));
  CHECK(IsWef(kThree, Allocation({0}), Pay({1, 7, 7})));
  CHECK_THROWS_AS(Slide(kThree, Pay({1}), 1), UsageError);
}

TEST_CASE("balance examples") {
  CHECK(Balance(kTwo, Pay({20, 0})) == Pay({10, -10}));
  CHECK(Balance(kTwo, PaymentVector::Zero(2)) == PaymentVector::Zero(2));
  const PaymentVector b = Balance(kThree, Pay({0, 6, 6}));
  CHECK(b == Pay({-4, 2, 2}));
  CHECK(IsWef(kThree, Allocation({0}), b));
}

TEST_CASE("normalize examples") {
  CHECK(NormalizeSubsidy(kTwo, Pay({3, 3})) == Pay({0, 0}));
  CHECK(NormalizeSubsidy(kTwo, Pay({20, 5})) == Pay({15, 0}));
  const Instance weighted({2, 1}, {{0}, {0}});
  CHECK(NormalizeSubsidy(weighted, Pay({4, 6})) == Pay({0, 4}));
  CHECK_THROWS_AS(NormalizeSubsidy(kTwo, Pay({-1, 3})), UsageError);
}

TEST_CASE("balanced to subsidy examples") {
  auto out = BalancedToSubsidy(kTwo, Pay({10, -10}));
  CHECK(out.total == 20);
  CHECK(out.subsidy == Pay({20, 0}));
  out = BalancedToSubsidy(kTwo, PaymentVector::Zero(2));
  CHECK(out.total == 0);
  CHECK(out.subsidy == PaymentVector::Zero(2));
  out = BalancedToSubsidy(kThree, Pay({-4, 2, 2}));
  CHECK(out.total == 12);
  CHECK(out.subsidy == Pay({0, 6, 6}));
  CHECK_THROWS_AS(BalancedToSubsidy(kTwo, Pay({1, 0})), UsageError);
}

TEST_CASE("transform properties on random WEF payments") {
  Lcg64 rng(99);
  for (const auto& pair :
       testing::RandomFeasiblePairs(300, 4, 5, WeightMode::kIntegerRange)) {
    const Instance& inst = pair.instance;
    const PaymentVector p = testing::RandomWefPayments(inst, pair.allocation, rng);
    REQUIRE(IsWef(inst, pair.allocation, p));

    // Slides keep WEF.
    CHECK(IsWef(inst, pair.allocation, Slide(inst, p, testing::RandomRational(rng, 9))));

    // Balance is exactly the slide by sum / W and sums to zero.
    const PaymentVector balanced = Balance(inst, p);
    CHECK(sgn(balanced.Sum()) == 0);
    CHECK(balanced == Slide(inst, p, p.Sum() / inst.total_weight()));
    CHECK(IsWef(inst, pair.allocation, balanced));

    // Round trip through the subsidy form.
    const auto converted = BalancedToSubsidy(inst, balanced);
    CHECK(Classify(converted.subsidy).subsidy);
    CHECK(converted.subsidy.Sum() == converted.total);
    CHECK(Balance(inst, converted.subsidy) == balanced);

    // Normalize: idempotent, a zero entry per unit weight, pointwise below.
    const PaymentVector s = MinimalSubsidy(inst, pair.allocation);
    const PaymentVector padded =
        Slide(inst, s, -Rational(static_cast<long>(rng.Uniform(0, 3))));
    const PaymentVector normal = NormalizeSubsidy(inst, padded);
    CHECK(NormalizeSubsidy(inst, normal) == normal);
    CHECK(Classify(normal).subsidy);
    bool has_zero = false;
    for (AgentIndex i = 0; i < normal.size(); ++i) {
      CHECK(normal[i] <= padded[i]);
      has_zero |= sgn(normal[i]) == 0;
    }
    CHECK(has_zero);
    CHECK(IsWef(inst, pair.allocation, normal));

    // Subsidy total T bounds every balanced entry by (w_i / W) T.
    const PaymentVector from_subsidy = Balance(inst, padded);
    const Rational total = padded.Sum();
    for (AgentIndex i = 0; i < from_subsidy.size(); ++i) {
      CHECK(-from_subsidy[i] <= inst.weight(i) / inst.total_weight() * total);
    }
  }
}

}  // namespace
}  // namespace wef
