#include "wef/objective.h"

#include <algorithm>

namespace wef {

std::string_view Name(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kP1: return "P1";
    case ObjectiveKind::kP1w: return "P1w";
    case ObjectiveKind::kP2: return "P2";
    case ObjectiveKind::kP3max: return "P3max";
    case ObjectiveKind::kP3norm: return "P3norm";
    case ObjectiveKind::kP4: return "P4";
    case ObjectiveKind::kP5sum: return "P5sum";
    case ObjectiveKind::kP5max: return "P5max";
  }
  return "?";
}

ObjectiveKind ParseObjective(std::string_view name) {
  for (ObjectiveKind kind : kAllObjectives) {
    if (Name(kind) == name) return kind;
  }
  throw UsageError("unknown objective '" + std::string(name) +
                   "' (expected P1, P1w, P2, P3max, P3norm, P4, P5sum or "
                   "P5max)");
}

bool IsSubsidyModel(ObjectiveKind kind) {
  return kind == ObjectiveKind::kP1 || kind == ObjectiveKind::kP1w ||
         kind == ObjectiveKind::kP2;
}

Rational EvaluateObjective(ObjectiveKind kind, const Instance& instance,
                           const PaymentVector& p) {
  if (p.size() != instance.num_agents()) {
    throw UsageError("payment length mismatch");
  }
  const std::size_t n = p.size();
  // Max-type objectives over a nonempty agent set.
  auto max_of = [&](auto term) {
    Rational best = term(0);
    for (AgentIndex i = 1; i < n; ++i) best = std::max<Rational>(best, term(i));
    return best;
  };
  Rational total;
  switch (kind) {
    case ObjectiveKind::kP1:
      return max_of([&](AgentIndex i) { return Rational(p[i]); });
    case ObjectiveKind::kP1w:
      return max_of(
          [&](AgentIndex i) { return Rational(p[i] / instance.weight(i)); });
    case ObjectiveKind::kP2:
      return p.Sum();
    case ObjectiveKind::kP3max:
      return max_of([&](AgentIndex i) { return Rational(-p[i]); });
    case ObjectiveKind::kP3norm:
      return max_of([&](AgentIndex i) {
        return Rational(instance.total_weight() / instance.weight(i) * -p[i]);
      });
    case ObjectiveKind::kP4:
      for (const auto& v : p.values) {
        if (sgn(v) < 0) total -= v;
      }
      return total;
    case ObjectiveKind::kP5sum:
      for (const auto& v : p.values) total += abs(v);
      return total;
    case ObjectiveKind::kP5max:
      return max_of([&](AgentIndex i) { return Rational(abs(p[i])); });
  }
  return total;
}

}  // namespace wef
