#ifndef WEF_ENVY_GRAPH_H_
#define WEF_ENVY_GRAPH_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "wef/model.h"

namespace wef {

// Complete digraph over agents with c_ij = v_i(A_j)/w_j - v_i(A_i)/w_i.
// With t_i = p_i / w_i, (A, p) is WEF iff t_i - t_j >= c_ij for all i != j.
class EnvyGraph {
 public:
  static EnvyGraph Build(const Instance& instance,
                         const Allocation& allocation);

  std::size_t size() const { return weights_.size(); }
  const Rational& weight(AgentIndex i, AgentIndex j) const {
    return weights_[i][j];
  }

  // Checks every difference constraint directly; an independent restatement
  // of CheckWef used to cross-validate the graph.
  bool SatisfiedBy(const Instance& instance,
                   const PaymentVector& payments) const;

 private:
  std::vector<std::vector<Rational>> weights_;
};

struct Feasibility {
  bool feasible = true;
  // When infeasible: agents a_0 -> a_1 -> ... -> a_k-1 -> a_0 whose edge
  // weights sum to cycle_weight > 0.
  std::vector<AgentIndex> cycle;
  Rational cycle_weight;
};

Feasibility CheckFeasibility(const EnvyGraph& graph);

class InfeasibleAllocation : public std::runtime_error {
 public:
  explicit InfeasibleAllocation(Feasibility witness);
  const Feasibility& witness() const { return witness_; }

 private:
  Feasibility witness_;
};

// L_i = heaviest path weight starting at i, empty path included (so L_i >= 0).
// Throws InfeasibleAllocation on a positive cycle.
std::vector<Rational> LongestPathsFrom(const EnvyGraph& graph);
// Same, but returns nullopt instead of throwing.
std::optional<std::vector<Rational>> TryLongestPathsFrom(
    const EnvyGraph& graph);

// s*_i = w_i * L_i: the coordinatewise smallest subsidy vector that makes the
// allocation WEF.
PaymentVector MinimalSubsidy(const Instance& instance,
                             const Allocation& allocation);

struct ClosedForms {
  Rational p1;      // max_i s*_i
  Rational p1w;     // max_i s*_i / w_i
  Rational p2;      // sum_i s*_i
  Rational p3norm;  // equals p2
  PaymentVector minimal_subsidy;
};

ClosedForms OptClosedForms(const Instance& instance,
                           const Allocation& allocation);

}  // namespace wef

#endif  // WEF_ENVY_GRAPH_H_
