#ifndef WEF_LP_H_
#define WEF_LP_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "wef/model.h"
#include "wef/objective.h"
#include "wef/rational.h"

namespace wef {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// minimize objective . x subject to the constraints and the optional
// per-variable lower bounds (variables without one are free).
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<Rational> objective;
  std::vector<std::optional<Rational>> lower_bounds;

  explicit LinearProgram(std::size_t vars = 0)
      : num_vars(vars), objective(vars), lower_bounds(vars) {}

  // Row helper: appends sum_k coefficients[k] x_k (rel) rhs.
  void AddConstraint(std::vector<Rational> coefficients, Relation relation,
                     Rational rhs);

  // Throws UsageError on dimension mismatches.
  void Validate() const;

  // Exact feasibility test of a point (used for witnesses).
  bool IsFeasible(const std::vector<Rational>& x) const;
  Rational ObjectiveValue(const std::vector<Rational>& x) const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view Name(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;                 // when optimal
  std::vector<Rational> solution;  // when optimal
};

// Two-phase dense tableau simplex with Bland's rule. Exact and deterministic.
LpResult Solve(const LinearProgram& lp);

// Independent brute-force solver enumerating every basic solution. Meant for
// tests; refuses problems beyond kOracleMaxVars variables or
// kOracleMaxConstraints constraint rows (lower bounds not counted).
inline constexpr std::size_t kOracleMaxVars = 8;
inline constexpr std::size_t kOracleMaxConstraints = 24;
bool WithinOracleGuard(const LinearProgram& lp);
LpResult VertexOracle(const LinearProgram& lp);

// Payment variables p_0..p_{n-1} come first in every payment LP; auxiliary
// epigraph/split variables follow.
LinearProgram BuildPaymentLp(const Instance& instance,
                             const Allocation& allocation,
                             ObjectiveKind objective);

}  // namespace wef

#endif  // WEF_LP_H_
