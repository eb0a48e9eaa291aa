#include "wef/fixtures.h"

#include <algorithm>

#include "wef/envy_graph.h"

namespace wef {
namespace {

void RequirePositive(const Rational& t) {
  if (sgn(t) <= 0) throw UsageError("T must be positive");
}

void RequireAgents(std::size_t n, std::size_t at_least) {
  if (n < at_least) {
    throw UsageError("family needs n >= " + std::to_string(at_least));
  }
}

Rational FromSize(std::size_t v) {
  return Rational(static_cast<unsigned long>(v));
}

// n agents of weight 1; `items` copies of an item worth `value` to everyone,
// item o handed to agent o.
Fixture IdenticalItems(std::string family, std::size_t n, std::size_t items,
                       const Rational& value) {
  std::vector<std::vector<Rational>> valuations(
      n, std::vector<Rational>(items, value));
  std::vector<AgentIndex> owner(items);
  for (std::size_t o = 0; o < items; ++o) owner[o] = o;
  return Fixture{std::move(family),
                 Instance(std::vector<Rational>(n, Rational(1)),
                          std::move(valuations)),
                 Allocation(std::move(owner)),
                 std::nullopt,
                 {}};
}

}  // namespace

Fixture GenIntro() {
  Fixture f{"intro",
            Instance({Rational(1), Rational(1)}, {{Rational(20)}, {Rational(30)}}),
            Allocation({1}),
            PaymentVector({Rational(15), Rational(-15)}),
            {}};
  f.expected["P1"] = 20;
  f.expected["P2"] = 20;
  f.expected["P3max"] = 10;
  return f;
}

Fixture GenLemma2a(std::size_t n, const Rational& t) {
  RequireAgents(n, 2);
  RequirePositive(t);
  Fixture f = IdenticalItems("lemma2a", n, 1, t);
  f.payments = PaymentVector(std::vector<Rational>(n, t));
  (*f.payments)[0] = 0;
  const Rational others = FromSize(n - 1);
  f.expected["P1"] = t;
  f.expected["P2"] = others * t;
  f.expected["P3max"] = others * t / FromSize(n);
  return f;
}

Fixture GenLemma2b(std::vector<Rational> weights, const Rational& t) {
  RequireAgents(weights.size(), 1);
  RequirePositive(t);
  for (const auto& w : weights) {
    if (sgn(w) <= 0) throw UsageError("weights must be positive");
  }
  const auto lightest = static_cast<AgentIndex>(
      std::min_element(weights.begin(), weights.end()) - weights.begin());
  const Rational min_weight = weights[lightest];
  const std::size_t n = weights.size();
  Fixture f{"lemma2b",
            Instance(weights, std::vector<std::vector<Rational>>(
                                  n, {Rational(min_weight * t)})),
            Allocation({lightest}),
            PaymentVector::Zero(n),
            {}};
  Rational total_weight;
  for (AgentIndex i = 0; i < n; ++i) {
    total_weight += weights[i];
    if (i != lightest) (*f.payments)[i] = weights[i] * t;
  }
  f.expected["P1w"] = t;
  f.expected["P2"] = (total_weight - min_weight) * t;
  return f;
}

Fixture GenRemarkP2(std::size_t n, const Rational& t) {
  RequireAgents(n, 2);
  RequirePositive(t);
  const Rational others = FromSize(n - 1);
  Fixture f = IdenticalItems("remark_p2", n, n - 1, others * t);
  f.payments = PaymentVector::Zero(n);
  (*f.payments)[n - 1] = others * t;
  f.expected["P2"] = others * t;
  f.expected["P3max"] = others * t / FromSize(n);
  f.expected["search_min_P1"] = others * t;
  return f;
}

Fixture GenLemma5(std::size_t n, const Rational& t) {
  RequireAgents(n, 2);
  if (n % 2 != 0) throw UsageError("lemma5 family needs an even n");
  RequirePositive(t);
  Fixture f = IdenticalItems("lemma5", n, n / 2, t);
  f.payments = PaymentVector::Zero(n);
  for (AgentIndex i = n / 2; i < n; ++i) (*f.payments)[i] = t;
  f.expected["P1"] = t;
  f.expected["P2"] = FromSize(n) * t / 2;
  f.expected["P4"] = FromSize(n) * t / 4;
  return f;
}

Fixture GenRemarkP5(std::size_t n, const Rational& t) {
  RequireAgents(n, 2);
  RequirePositive(t);
  const Rational quarter = FromSize(n) * t / 4;  // nT/4
  const Rational value = quarter * FromSize(n) / FromSize(n - 1);
  Fixture f = IdenticalItems("remark_p5", n, n - 1, value);
  f.payments = PaymentVector(
      std::vector<Rational>(n, Rational(-quarter / FromSize(n - 1))));
  (*f.payments)[n - 1] = quarter;
  f.expected["P4"] = quarter;
  f.expected["search_min_P1_at_least"] = value;
  return f;
}

Instance GenRandom(std::uint64_t seed, std::size_t n, std::size_t m,
                   int max_value, WeightMode mode) {
  if (n < 1 || n > kRandomMaxAgents || m > kRandomMaxItems) {
    throw UsageError("random instances need 1 <= n <= " +
                     std::to_string(kRandomMaxAgents) + " and m <= " +
                     std::to_string(kRandomMaxItems));
  }
  if (max_value < 0) throw UsageError("max value must be nonnegative");
  Lcg64 rng(seed);
  std::vector<Rational> weights(n, Rational(1));
  if (mode == WeightMode::kIntegerRange) {
    for (auto& w : weights) {
      w = static_cast<unsigned long>(rng.Uniform(1, kRandomMaxWeight));
    }
  }
  std::vector<std::vector<Rational>> valuations(n, std::vector<Rational>(m));
  for (auto& row : valuations) {
    for (auto& v : row) {
      v = static_cast<unsigned long>(
          rng.Uniform(0, static_cast<std::uint64_t>(max_value)));
    }
  }
  return Instance(std::move(weights), std::move(valuations));
}

Fixture GenRandomFixture(std::uint64_t seed, std::size_t n, std::size_t m,
                         int max_value, WeightMode mode) {
  Fixture f{"random", GenRandom(seed, n, m, max_value, mode), std::nullopt,
            std::nullopt, {}};
  // Continue the same stream past the instance draws.
  Lcg64 rng(seed);
  const std::size_t instance_draws =
      (mode == WeightMode::kIntegerRange ? n : 0) + n * m;
  for (std::size_t k = 0; k < instance_draws; ++k) rng.Next();

  auto feasible = [&](const Allocation& a) {
    return CheckFeasibility(EnvyGraph::Build(f.instance, a)).feasible;
  };
  for (int attempt = 0; attempt < 64 && !f.allocation; ++attempt) {
    std::vector<AgentIndex> owner(m);
    for (auto& o : owner) o = rng.Uniform(0, n - 1);
    Allocation a(std::move(owner));
    if (feasible(a)) f.allocation = std::move(a);
  }
  if (!f.allocation) {
    const std::uint64_t count = *AllocationCount(n, m);
    for (std::uint64_t k = 0; k < count && !f.allocation; ++k) {
      Allocation a = AllocationAt(k, n, m);
      if (feasible(a)) f.allocation = std::move(a);
    }
  }
  if (f.allocation) {
    const ClosedForms forms = OptClosedForms(f.instance, *f.allocation);
    f.payments = forms.minimal_subsidy;
    f.expected["P1"] = forms.p1;
    f.expected["P1w"] = forms.p1w;
    f.expected["P2"] = forms.p2;
  }
  return f;
}

}  // namespace wef
