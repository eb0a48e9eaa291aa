#ifndef WEF_TRANSFORMS_H_
#define WEF_TRANSFORMS_H_

#include "wef/model.h"

namespace wef {

// Payment transformations that keep the allocation fixed. Every one of them
// shifts p by a multiple of the weight vector, so weighted envy is unchanged.

// p_i - z * w_i.
PaymentVector Slide(const Instance& instance, const PaymentVector& payments,
                    const Rational& z);

// Slide by z = (sum p) / W; the result sums to exactly zero.
PaymentVector Balance(const Instance& instance, const PaymentVector& payments);

// Slide a subsidy vector down by min_j s_j / w_j. The result is still a
// subsidy, is pointwise <= the input and has a zero entry.
// Throws UsageError if the input has a negative entry.
PaymentVector NormalizeSubsidy(const Instance& instance,
                               const PaymentVector& subsidy);

struct SubsidyWithTotal {
  PaymentVector subsidy;
  Rational total;  // T = max_i (W / w_i)(-p_i), and sum_i s_i == T
};

// s_i = p_i + (w_i / W) T. Throws UsageError unless the input is balanced.
SubsidyWithTotal BalancedToSubsidy(const Instance& instance,
                                   const PaymentVector& balanced);

}  // namespace wef

#endif  // WEF_TRANSFORMS_H_
