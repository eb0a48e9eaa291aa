#ifndef WEF_OBJECTIVE_H_
#define WEF_OBJECTIVE_H_

#include <array>
#include <string>
#include <string_view>

#include "wef/model.h"

namespace wef {

// P1/P1w/P2 range over subsidy vectors; the rest over balanced vectors.
//
// P5 is offered in two readings: the displayed formula is the sum of
// absolute payments (P5sum) while the accompanying text speaks of the
// largest absolute payment (P5max). Both are computed, neither is preferred.
enum class ObjectiveKind {
  kP1,      // max_i s_i
  kP1w,     // max_i s_i / w_i
  kP2,      // sum_i s_i
  kP3max,   // max_i (-p_i)
  kP3norm,  // max_i (W / w_i)(-p_i)
  kP4,      // sum over p_i < 0 of -p_i
  kP5sum,   // sum_i |p_i|
  kP5max,   // max_i |p_i|
};

inline constexpr std::array<ObjectiveKind, 8> kAllObjectives = {
    ObjectiveKind::kP1,    ObjectiveKind::kP1w,   ObjectiveKind::kP2,
    ObjectiveKind::kP3max, ObjectiveKind::kP3norm, ObjectiveKind::kP4,
    ObjectiveKind::kP5sum, ObjectiveKind::kP5max};

std::string_view Name(ObjectiveKind kind);
// Throws UsageError for unknown names.
ObjectiveKind ParseObjective(std::string_view name);

bool IsSubsidyModel(ObjectiveKind kind);

// Objective value of a concrete payment vector (no feasibility check).
Rational EvaluateObjective(ObjectiveKind kind, const Instance& instance,
                           const PaymentVector& payments);

}  // namespace wef

#endif  // WEF_OBJECTIVE_H_
