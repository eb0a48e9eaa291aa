#ifndef WEF_MODEL_H_
#define WEF_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wef/rational.h"

namespace wef {

using AgentIndex = std::size_t;
using ItemIndex = std::size_t;

// Raised when a caller violates an operation's precondition (bad index,
// wrong vector length, payment vector of the wrong class, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Agents with positive entitlements and an additive, nonnegative valuation
// matrix over the items. Immutable once constructed.
class Instance {
 public:
  // valuations[i][o] is agent i's value for item o. Every row must have the
  // same length. Throws UsageError if a weight is not positive, a value is
  // negative, or the shape is inconsistent.
  Instance(std::vector<Rational> weights,
           std::vector<std::vector<Rational>> valuations);

  std::size_t num_agents() const { return weights_.size(); }
  std::size_t num_items() const { return num_items_; }
  const Rational& weight(AgentIndex i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& total_weight() const { return total_weight_; }
  const Rational& min_weight() const { return min_weight_; }
  bool equal_weights() const;
  const Rational& value(AgentIndex i, ItemIndex o) const {
    return valuations_[i][o];
  }
  const std::vector<std::vector<Rational>>& valuations() const {
    return valuations_;
  }

 private:
  std::vector<Rational> weights_;
  std::vector<std::vector<Rational>> valuations_;
  std::size_t num_items_ = 0;
  Rational total_weight_;
  Rational min_weight_;
};

// Item o goes to agent owner[o]. Bundles may be empty.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<AgentIndex> owner)
      : owner_(std::move(owner)) {}

  const std::vector<AgentIndex>& owner() const { return owner_; }
  std::size_t num_items() const { return owner_.size(); }

  // Throws UsageError unless every item is owned by an agent of `instance`.
  void Validate(const Instance& instance) const;

  std::vector<std::vector<ItemIndex>> Bundles(std::size_t num_agents) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<AgentIndex> owner_;
};

// One payment per agent; p_i is the amount paid *to* agent i.
struct PaymentVector {
  std::vector<Rational> values;

  PaymentVector() = default;
  explicit PaymentVector(std::vector<Rational> v) : values(std::move(v)) {}
  static PaymentVector Zero(std::size_t n) {
    return PaymentVector(std::vector<Rational>(n, Rational(0)));
  }

  std::size_t size() const { return values.size(); }
  const Rational& operator[](AgentIndex i) const { return values[i]; }
  Rational& operator[](AgentIndex i) { return values[i]; }

  Rational Sum() const;
  // p_{N'} for a subset N' of agents.
  Rational SubsetSum(std::span<const AgentIndex> agents) const;

  friend bool operator==(const PaymentVector&, const PaymentVector&) = default;
};

struct Classification {
  bool balanced = false;  // sum is exactly zero
  bool subsidy = false;   // every entry is nonnegative

  // "balanced", "subsidy", "balanced, subsidy" or "neither".
  std::string Label() const;
};

Classification Classify(const PaymentVector& payments);

// Agent `envious` prefers agent `envied`'s bundle plus payment, per unit of
// entitlement, by `deficit` > 0.
struct WefWitness {
  AgentIndex envious = 0;
  AgentIndex envied = 0;
  Rational deficit;
};

Rational BundleValue(const Instance& instance, AgentIndex agent,
                     std::span<const ItemIndex> bundle);

// values[i][j] = v_i(A_j).
std::vector<std::vector<Rational>> BundleValueMatrix(
    const Instance& instance, const Allocation& allocation);

// Returns nullopt when (A, p) is weighted envy-free. Otherwise the witness
// with the largest deficit; ties go to the lexicographically smallest (i, j).
std::optional<WefWitness> CheckWef(const Instance& instance,
                                   const Allocation& allocation,
                                   const PaymentVector& payments);

inline bool IsWef(const Instance& instance, const Allocation& allocation,
                  const PaymentVector& payments) {
  return !CheckWef(instance, allocation, payments).has_value();
}

}  // namespace wef

#endif  // WEF_MODEL_H_
