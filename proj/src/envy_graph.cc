#include "wef/envy_graph.h"

#include <algorithm>
#include <optional>

namespace wef {
namespace {

std::string DescribeCycle(const Feasibility& f) {
  std::string text = "allocation admits no WEF payments: positive envy cycle";
  for (AgentIndex a : f.cycle) text += " " + std::to_string(a) + " ->";
  if (!f.cycle.empty()) text += " " + std::to_string(f.cycle.front());
  text += " (weight " + ToString(f.cycle_weight) + ")";
  return text;
}

struct Relaxation {
  std::vector<Rational> longest;
  // Set when a positive cycle keeps improving the labels.
  std::optional<Feasibility> cycle;
};

// Bellman-Ford for longest paths with every label starting at 0 (the empty
// path). Without positive cycles n - 1 rounds converge; an improvement in
// round n proves one exists.
Relaxation Relax(const EnvyGraph& graph) {
  const std::size_t n = graph.size();
  Relaxation r;
  r.longest.assign(n, Rational(0));
  std::vector<std::optional<AgentIndex>> next(n);
  std::optional<AgentIndex> last_updated;
  for (std::size_t round = 0; round < n; ++round) {
    last_updated.reset();
    for (AgentIndex i = 0; i < n; ++i) {
      for (AgentIndex j = 0; j < n; ++j) {
        if (i == j) continue;
        Rational candidate = graph.weight(i, j) + r.longest[j];
        if (candidate > r.longest[i]) {
          r.longest[i] = std::move(candidate);
          next[i] = j;
          last_updated = i;
        }
      }
    }
    if (!last_updated) return r;
  }

  // Walking n successor steps from a vertex updated in round n lands on the
  // cycle.
  AgentIndex x = *last_updated;
  for (std::size_t step = 0; step < n; ++step) {
    if (!next[x]) throw std::logic_error("broken successor chain");
    x = *next[x];
  }
  Feasibility f;
  f.feasible = false;
  AgentIndex y = x;
  do {
    f.cycle.push_back(y);
    f.cycle_weight += graph.weight(y, *next[y]);
    y = *next[y];
  } while (y != x);
  // Rotate so the witness starts at its smallest agent.
  std::rotate(f.cycle.begin(),
              std::min_element(f.cycle.begin(), f.cycle.end()), f.cycle.end());
  if (sgn(f.cycle_weight) <= 0) {
    throw std::logic_error("extracted envy cycle is not positive");
  }
  r.cycle = std::move(f);
  return r;
}

}  // namespace

EnvyGraph EnvyGraph::Build(const Instance& instance,
                           const Allocation& allocation) {
  const auto values = BundleValueMatrix(instance, allocation);
  const std::size_t n = instance.num_agents();
  EnvyGraph graph;
  graph.weights_.assign(n, std::vector<Rational>(n));
  for (AgentIndex i = 0; i < n; ++i) {
    const Rational own = values[i][i] / instance.weight(i);
    for (AgentIndex j = 0; j < n; ++j) {
      if (i != j) graph.weights_[i][j] = values[i][j] / instance.weight(j) - own;
    }
  }
  return graph;
}

bool EnvyGraph::SatisfiedBy(const Instance& instance,
                            const PaymentVector& payments) const {
  if (payments.size() != size()) throw UsageError("payment length mismatch");
  for (AgentIndex i = 0; i < size(); ++i) {
    for (AgentIndex j = 0; j < size(); ++j) {
      if (i == j) continue;
      if (payments[i] / instance.weight(i) - payments[j] / instance.weight(j) <
          weights_[i][j]) {
        return false;
      }
    }
  }
  return true;
}

InfeasibleAllocation::InfeasibleAllocation(Feasibility witness)
    : std::runtime_error(DescribeCycle(witness)),
      witness_(std::move(witness)) {}

Feasibility CheckFeasibility(const EnvyGraph& graph) {
  auto r = Relax(graph);
  if (r.cycle) return std::move(*r.cycle);
  return Feasibility{};
}

std::vector<Rational> LongestPathsFrom(const EnvyGraph& graph) {
  auto r = Relax(graph);
  if (r.cycle) throw InfeasibleAllocation(std::move(*r.cycle));
  return std::move(r.longest);
}

std::optional<std::vector<Rational>> TryLongestPathsFrom(
    const EnvyGraph& graph) {
  auto r = Relax(graph);
  if (r.cycle) return std::nullopt;
  return std::move(r.longest);
}

PaymentVector MinimalSubsidy(const Instance& instance,
                             const Allocation& allocation) {
  const auto longest = LongestPathsFrom(EnvyGraph::Build(instance, allocation));
  PaymentVector s = PaymentVector::Zero(instance.num_agents());
  for (AgentIndex i = 0; i < s.size(); ++i) {
    s[i] = instance.weight(i) * longest[i];
  }
  return s;
}

ClosedForms OptClosedForms(const Instance& instance,
                           const Allocation& allocation) {
  ClosedForms forms;
  forms.minimal_subsidy = MinimalSubsidy(instance, allocation);
  const auto& s = forms.minimal_subsidy;
  for (AgentIndex i = 0; i < s.size(); ++i) {
    forms.p1 = std::max(forms.p1, s[i]);
    forms.p1w = std::max<Rational>(forms.p1w, s[i] / instance.weight(i));
    forms.p2 += s[i];
  }
  forms.p3norm = forms.p2;
  return forms;
}

}  // namespace wef
