#include "wef/optimize.h"

#include <stdexcept>

#include "wef/envy_graph.h"
#include "wef/fixtures.h"
#include "wef/lp.h"
#include "wef/transforms.h"

namespace wef {
namespace {

bool HasClosedForm(ObjectiveKind kind) {
  return kind == ObjectiveKind::kP1 || kind == ObjectiveKind::kP1w ||
         kind == ObjectiveKind::kP2 || kind == ObjectiveKind::kP3norm;
}

OptResult SolveByLp(const Instance& instance, const Allocation& allocation,
                    ObjectiveKind objective) {
  const LinearProgram lp = BuildPaymentLp(instance, allocation, objective);
  const LpResult solved = Solve(lp);
  if (solved.status != LpStatus::kOptimal) {
    throw std::logic_error("payment LP for a feasible allocation is " +
                           std::string(Name(solved.status)));
  }
  OptResult out;
  out.value = solved.value;
  out.witness.values.assign(solved.solution.begin(),
                            solved.solution.begin() +
                                static_cast<std::ptrdiff_t>(instance.num_agents()));
  if (EvaluateObjective(objective, instance, out.witness) != out.value) {
    throw std::logic_error("LP witness does not attain the LP optimum");
  }
  return out;
}

}  // namespace

OptResult OptForAllocation(const Instance& instance,
                           const Allocation& allocation,
                           ObjectiveKind objective, Engine engine) {
  allocation.Validate(instance);
  const Feasibility feasibility =
      CheckFeasibility(EnvyGraph::Build(instance, allocation));
  if (!feasibility.feasible) throw InfeasibleAllocation(feasibility);

  if (engine == Engine::kLinearProgram || !HasClosedForm(objective)) {
    return SolveByLp(instance, allocation, objective);
  }
  ClosedForms forms = OptClosedForms(instance, allocation);
  switch (objective) {
    case ObjectiveKind::kP1:
      return {forms.p1, std::move(forms.minimal_subsidy)};
    case ObjectiveKind::kP1w:
      return {forms.p1w, std::move(forms.minimal_subsidy)};
    case ObjectiveKind::kP2:
      return {forms.p2, std::move(forms.minimal_subsidy)};
    default:
      return {forms.p3norm, Balance(instance, forms.minimal_subsidy)};
  }
}

bool BoundsReport::AllHold() const {
  for (const auto& row : rows) {
    if (!row.holds) return false;
  }
  return true;
}

BoundsReport CheckBounds(const Instance& instance,
                         const Allocation& allocation) {
  const ClosedForms forms = OptClosedForms(instance, allocation);
  const Rational n(static_cast<unsigned long>(instance.num_agents()));
  const Rational& total_weight = instance.total_weight();
  const Rational& min_weight = instance.min_weight();

  BoundsReport report;
  auto add = [&](std::string name, std::string statement, Rational lhs,
                 Rational rhs, bool equality) {
    BoundsRow row{std::move(name), std::move(statement), std::move(lhs),
                  std::move(rhs), equality, false, false};
    row.holds = equality ? row.lhs == row.rhs : row.lhs <= row.rhs;
    row.tight = row.lhs == row.rhs;
    report.rows.push_back(std::move(row));
  };

  add("L2a", "OPT_P2 <= (n-1) OPT_P1", forms.p2, (n - 1) * forms.p1, false);
  add("L2b", "OPT_P2 <= (W-w_min) OPT_P1w", forms.p2,
      (total_weight - min_weight) * forms.p1w, false);
  add("L3", "OPT_P2 = OPT_P3norm", forms.p2,
      OptForAllocation(instance, allocation, ObjectiveKind::kP3norm,
                       Engine::kLinearProgram)
          .value,
      true);

  const PaymentVector balanced = Balance(instance, forms.minimal_subsidy);
  Rational worst_per_weight = -balanced[0] / instance.weight(0);
  for (AgentIndex i = 1; i < balanced.size(); ++i) {
    worst_per_weight =
        std::max<Rational>(worst_per_weight, -balanced[i] / instance.weight(i));
  }
  add("L4a", "max_i (W/w_i)(-p_i) <= (n-1) OPT_P1",
      EvaluateObjective(ObjectiveKind::kP3norm, instance, balanced),
      (n - 1) * forms.p1, false);
  add("L4b", "max_i (-p_i)/w_i <= (1-w_min/W) OPT_P1w", worst_per_weight,
      (1 - min_weight / total_weight) * forms.p1w, false);

  if (instance.equal_weights()) {
    add("L5", "OPT_P4 <= (n/4) OPT_P1",
        OptForAllocation(instance, allocation, ObjectiveKind::kP4).value,
        n / 4 * forms.p1, false);
  }
  return report;
}

std::vector<ExploreRow> ExploreOpen(const ExploreConfig& config) {
  if (config.num_agents == 0 || config.num_agents > kRandomMaxAgents ||
      config.num_items > kRandomMaxItems) {
    throw UsageError("explore limited to 1.." +
                     std::to_string(kRandomMaxAgents) + " agents and " +
                     std::to_string(kRandomMaxItems) + " items");
  }
  std::vector<std::pair<std::string, Fixture>> cases;
  if (config.include_fixtures) {
    cases.emplace_back("intro", GenIntro());
    cases.emplace_back("lemma2a(3,6)", GenLemma2a(3, 6));
    cases.emplace_back("remark_p2(3,2)", GenRemarkP2(3, 2));
    cases.emplace_back("lemma5(4,8)", GenLemma5(4, 8));
    cases.emplace_back("remark_p5(3,8)", GenRemarkP5(3, 8));
  }
  for (std::size_t k = 0; k < config.count; ++k) {
    const std::uint64_t seed = config.seed + k;
    cases.emplace_back("random(" + std::to_string(seed) + ")",
                       GenRandomFixture(seed, config.num_agents,
                                        config.num_items, config.max_value,
                                        config.weight_mode));
  }

  std::vector<ExploreRow> rows;
  for (const auto& [id, fixture] : cases) {
    if (!fixture.allocation) continue;
    const Instance& inst = fixture.instance;
    const Allocation& alloc = *fixture.allocation;
    ExploreRow row;
    row.id = id;
    const ClosedForms forms = OptClosedForms(inst, alloc);
    row.p1 = forms.p1;
    row.p2 = forms.p2;
    row.p4 = OptForAllocation(inst, alloc, ObjectiveKind::kP4).value;
    row.p5sum = OptForAllocation(inst, alloc, ObjectiveKind::kP5sum).value;
    row.p5max = OptForAllocation(inst, alloc, ObjectiveKind::kP5max).value;
    if (sgn(row.p2) != 0) {
      row.p4_over_p2 = row.p4 / row.p2;
      row.p5sum_over_p2 = row.p5sum / row.p2;
      row.p5max_over_p2 = row.p5max / row.p2;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace wef
