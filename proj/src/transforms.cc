#include "wef/transforms.h"

#include <algorithm>

namespace wef {
namespace {

void CheckLength(const Instance& instance, const PaymentVector& p) {
  if (p.size() != instance.num_agents()) {
    throw UsageError("payment vector has " + std::to_string(p.size()) +
                     " entries, expected " +
                     std::to_string(instance.num_agents()));
  }
}

}  // namespace

PaymentVector Slide(const Instance& instance, const PaymentVector& payments,
                    const Rational& z) {
  CheckLength(instance, payments);
  PaymentVector out = payments;
  for (AgentIndex i = 0; i < out.size(); ++i) out[i] -= z * instance.weight(i);
  return out;
}

PaymentVector Balance(const Instance& instance, const PaymentVector& payments) {
  CheckLength(instance, payments);
  return Slide(instance, payments, payments.Sum() / instance.total_weight());
}

PaymentVector NormalizeSubsidy(const Instance& instance,
                               const PaymentVector& subsidy) {
  CheckLength(instance, subsidy);
  if (!Classify(subsidy).subsidy) {
    throw UsageError("normalize expects a subsidy vector (all entries >= 0)");
  }
  Rational lowest = subsidy[0] / instance.weight(0);
  for (AgentIndex i = 1; i < subsidy.size(); ++i) {
    lowest = std::min<Rational>(lowest, subsidy[i] / instance.weight(i));
  }
  return Slide(instance, subsidy, lowest);
}

SubsidyWithTotal BalancedToSubsidy(const Instance& instance,
                                   const PaymentVector& balanced) {
  CheckLength(instance, balanced);
  if (!Classify(balanced).balanced) {
    throw UsageError("to-subsidy expects a balanced vector (sum = 0), sum is " +
                     ToString(balanced.Sum()));
  }
  const Rational& total_weight = instance.total_weight();
  Rational t = total_weight / instance.weight(0) * -balanced[0];
  for (AgentIndex i = 1; i < balanced.size(); ++i) {
    t = std::max<Rational>(t, total_weight / instance.weight(i) * -balanced[i]);
  }
  // s_i = p_i + (w_i / W) T is a slide by z = -T / W.
  SubsidyWithTotal out{Slide(instance, balanced, -t / total_weight), t};
  return out;
}

}  // namespace wef
