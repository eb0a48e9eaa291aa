#include "wef/model.h"

#include <algorithm>

namespace wef {

Instance::Instance(std::vector<Rational> weights,
                   std::vector<std::vector<Rational>> valuations)
    : weights_(std::move(weights)), valuations_(std::move(valuations)) {
  if (weights_.empty()) throw UsageError("instance needs at least one agent");
  if (valuations_.size() != weights_.size()) {
    throw UsageError("valuations must have one row per agent (got " +
                     std::to_string(valuations_.size()) + " rows for " +
                     std::to_string(weights_.size()) + " agents)");
  }
  num_items_ = valuations_.front().size();
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (sgn(weights_[i]) <= 0) {
      throw UsageError("weight of agent " + std::to_string(i) +
                       " must be positive");
    }
    if (valuations_[i].size() != num_items_) {
      throw UsageError("valuation row " + std::to_string(i) + " has " +
                       std::to_string(valuations_[i].size()) +
                       " entries, expected " + std::to_string(num_items_));
    }
    for (std::size_t o = 0; o < num_items_; ++o) {
      if (sgn(valuations_[i][o]) < 0) {
        throw UsageError("valuation of agent " + std::to_string(i) +
                         " for item " + std::to_string(o) + " is negative");
      }
    }
    total_weight_ += weights_[i];
  }
  min_weight_ = *std::min_element(weights_.begin(), weights_.end());
}

bool Instance::equal_weights() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](const Rational& w) { return w == weights_.front(); });
}

void Allocation::Validate(const Instance& instance) const {
  if (owner_.size() != instance.num_items()) {
    throw UsageError("allocation lists " + std::to_string(owner_.size()) +
                     " items, instance has " +
                     std::to_string(instance.num_items()));
  }
  for (std::size_t o = 0; o < owner_.size(); ++o) {
    if (owner_[o] >= instance.num_agents()) {
      throw UsageError("item " + std::to_string(o) + " assigned to agent " +
                       std::to_string(owner_[o]) + ", out of range");
    }
  }
}

std::vector<std::vector<ItemIndex>> Allocation::Bundles(
    std::size_t num_agents) const {
  std::vector<std::vector<ItemIndex>> bundles(num_agents);
  for (ItemIndex o = 0; o < owner_.size(); ++o) bundles[owner_[o]].push_back(o);
  return bundles;
}

Rational PaymentVector::Sum() const {
  Rational total;
  for (const auto& p : values) total += p;
  return total;
}

Rational PaymentVector::SubsetSum(std::span<const AgentIndex> agents) const {
  Rational total;
  for (AgentIndex i : agents) {
    if (i >= values.size()) throw UsageError("agent index out of range");
    total += values[i];
  }
  return total;
}

std::string Classification::Label() const {
  if (balanced && subsidy) return "balanced, subsidy";
  if (balanced) return "balanced";
  if (subsidy) return "subsidy";
  return "neither";
}

Classification Classify(const PaymentVector& payments) {
  Classification c;
  c.balanced = sgn(payments.Sum()) == 0;
  c.subsidy = std::all_of(payments.values.begin(), payments.values.end(),
                          [](const Rational& p) { return sgn(p) >= 0; });
  return c;
}

Rational BundleValue(const Instance& instance, AgentIndex agent,
                     std::span<const ItemIndex> bundle) {
  if (agent >= instance.num_agents()) {
    throw UsageError("agent " + std::to_string(agent) + " out of range");
  }
  Rational total;
  for (ItemIndex o : bundle) {
    if (o >= instance.num_items()) {
      throw UsageError("item " + std::to_string(o) + " out of range");
    }
    total += instance.value(agent, o);
  }
  return total;
}

std::vector<std::vector<Rational>> BundleValueMatrix(
    const Instance& instance, const Allocation& allocation) {
  allocation.Validate(instance);
  const std::size_t n = instance.num_agents();
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(n));
  for (ItemIndex o = 0; o < allocation.num_items(); ++o) {
    const AgentIndex holder = allocation.owner()[o];
    for (AgentIndex i = 0; i < n; ++i) values[i][holder] += instance.value(i, o);
  }
  return values;
}

std::optional<WefWitness> CheckWef(const Instance& instance,
                                   const Allocation& allocation,
                                   const PaymentVector& payments) {
  const std::size_t n = instance.num_agents();
  if (payments.size() != n) {
    throw UsageError("payment vector has " + std::to_string(payments.size()) +
                     " entries, expected " + std::to_string(n));
  }
  const auto values = BundleValueMatrix(instance, allocation);
  std::optional<WefWitness> worst;
  for (AgentIndex i = 0; i < n; ++i) {
    const Rational own = (values[i][i] + payments[i]) / instance.weight(i);
    for (AgentIndex j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational deficit =
          (values[i][j] + payments[j]) / instance.weight(j) - own;
      if (sgn(deficit) > 0 && (!worst || deficit > worst->deficit)) {
        worst = WefWitness{i, j, std::move(deficit)};
      }
    }
  }
  return worst;
}

}  // namespace wef
