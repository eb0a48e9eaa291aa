#include "wef/envy_graph.h"
#include "wef/lp.h"

namespace wef {

LinearProgram BuildPaymentLp(const Instance& instance,
                             const Allocation& allocation,
                             ObjectiveKind objective) {
  const std::size_t n = instance.num_agents();
  const EnvyGraph graph = EnvyGraph::Build(instance, allocation);

  std::size_t aux = 0;
  switch (objective) {
    case ObjectiveKind::kP1:
    case ObjectiveKind::kP1w:
    case ObjectiveKind::kP3max:
    case ObjectiveKind::kP3norm:
    case ObjectiveKind::kP5max:
      aux = 1;  // epigraph variable t
      break;
    case ObjectiveKind::kP2:
      break;
    case ObjectiveKind::kP4:
      aux = n;  // q_i >= max(0, -p_i)
      break;
    case ObjectiveKind::kP5sum:
      aux = 2 * n;  // p_i = r_i - q_i
      break;
  }
  LinearProgram lp(n + aux);
  auto row = [&] { return std::vector<Rational>(lp.num_vars); };

  // p_i / w_i - p_j / w_j >= c_ij
  for (AgentIndex i = 0; i < n; ++i) {
    for (AgentIndex j = 0; j < n; ++j) {
      if (i == j) continue;
      auto a = row();
      a[i] = 1 / instance.weight(i);
      a[j] = -1 / instance.weight(j);
      lp.AddConstraint(std::move(a), Relation::kGreaterEqual, graph.weight(i, j));
    }
  }
  if (IsSubsidyModel(objective)) {
    for (AgentIndex i = 0; i < n; ++i) lp.lower_bounds[i] = Rational(0);
  } else {
    auto a = row();
    for (AgentIndex i = 0; i < n; ++i) a[i] = 1;
    lp.AddConstraint(std::move(a), Relation::kEqual, Rational(0));
  }

  const std::size_t t = n;
  // t + coefficient * p_i >= 0 for every agent.
  auto epigraph = [&](auto coefficient) {
    lp.objective[t] = 1;
    for (AgentIndex i = 0; i < n; ++i) {
      auto a = row();
      a[t] = 1;
      a[i] = coefficient(i);
      lp.AddConstraint(std::move(a), Relation::kGreaterEqual, Rational(0));
    }
  };
  switch (objective) {
    case ObjectiveKind::kP1:
      epigraph([](AgentIndex) { return Rational(-1); });
      break;
    case ObjectiveKind::kP1w:
      epigraph([&](AgentIndex i) { return Rational(-1 / instance.weight(i)); });
      break;
    case ObjectiveKind::kP2:
      for (AgentIndex i = 0; i < n; ++i) lp.objective[i] = 1;
      break;
    case ObjectiveKind::kP3max:
      epigraph([](AgentIndex) { return Rational(1); });
      break;
    case ObjectiveKind::kP3norm:
      epigraph([&](AgentIndex i) {
        return Rational(instance.total_weight() / instance.weight(i));
      });
      break;
    case ObjectiveKind::kP4:
      for (AgentIndex i = 0; i < n; ++i) {
        const std::size_t q = n + i;
        lp.lower_bounds[q] = Rational(0);
        lp.objective[q] = 1;
        auto a = row();
        a[q] = 1;
        a[i] = 1;
        lp.AddConstraint(std::move(a), Relation::kGreaterEqual, Rational(0));
      }
      break;
    case ObjectiveKind::kP5sum:
      for (AgentIndex i = 0; i < n; ++i) {
        const std::size_t q = n + i;
        const std::size_t r = 2 * n + i;
        lp.lower_bounds[q] = Rational(0);
        lp.lower_bounds[r] = Rational(0);
        lp.objective[q] = 1;
        lp.objective[r] = 1;
        auto a = row();
        a[i] = 1;
        a[q] = 1;
        a[r] = -1;
        lp.AddConstraint(std::move(a), Relation::kEqual, Rational(0));
      }
      break;
    case ObjectiveKind::kP5max:
      epigraph([](AgentIndex) { return Rational(-1); });
      epigraph([](AgentIndex) { return Rational(1); });
      break;
  }
  return lp;
}

}  // namespace wef
