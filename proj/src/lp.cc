#include "wef/lp.h"

#include <limits>
#include <stdexcept>

namespace wef {
namespace {

struct ColumnMap {
  std::size_t positive = 0;
  std::optional<std::size_t> negative;  // free variables are split
  Rational shift;                       // lower bound, or 0
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cells_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cells_.empty() ? 0 : cells_[0].size() - 1; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r].back(); }
  const Rational& rhs(std::size_t r) const { return cells_[r].back(); }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational pivot = cells_[row][col];
    for (auto& v : cells_[row]) v /= pivot;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == row || sgn(cells_[r][col]) == 0) continue;
      const Rational factor = cells_[r][col];
      for (std::size_t c = 0; c < cells_[r].size(); ++c) {
        if (sgn(cells_[row][c]) != 0) cells_[r][c] -= factor * cells_[row][c];
      }
    }
    basis_[row] = col;
  }

  void EraseRow(std::size_t row) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  Rational Cost(const std::vector<Rational>& cost) const {
    Rational total;
    for (std::size_t r = 0; r < rows(); ++r) total += cost[basis_[r]] * rhs(r);
    return total;
  }

 private:
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
};

// C(n, k) saturating at uint64 max: the number of possible bases, which
// bounds the iterations of a non-cycling simplex.
std::uint64_t BasisCountBound(std::size_t n, std::size_t k) {
  if (k > n) return 1;
  k = std::min(k, n - k);
  unsigned __int128 value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(value);
}

enum class PhaseOutcome { kOptimal, kUnbounded };

// Minimizes cost over the tableau; only columns < entering_limit may enter.
PhaseOutcome RunPhase(Tableau& t, const std::vector<Rational>& cost,
                      std::size_t entering_limit, std::uint64_t max_iterations) {
  for (std::uint64_t iteration = 0;; ++iteration) {
    if (iteration > max_iterations) {
      throw std::logic_error("simplex exceeded its iteration bound");
    }
    // Bland: lowest-index column with negative reduced cost enters.
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < entering_limit && !entering; ++c) {
      Rational reduced = cost[c];
      for (std::size_t r = 0; r < t.rows(); ++r) {
        if (sgn(t.at(r, c)) != 0) reduced -= cost[t.basic(r)] * t.at(r, c);
      }
      if (sgn(reduced) < 0) entering = c;
    }
    if (!entering) return PhaseOutcome::kOptimal;

    // Minimum ratio; ties go to the lowest-index basic variable.
    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (sgn(t.at(r, *entering)) <= 0) continue;
      Rational ratio = t.rhs(r) / t.at(r, *entering);
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && t.basic(r) < t.basic(*leaving))) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (!leaving) return PhaseOutcome::kUnbounded;
    t.Pivot(*leaving, *entering);
  }
}

}  // namespace

void LinearProgram::AddConstraint(std::vector<Rational> coefficients,
                                  Relation relation, Rational rhs) {
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::Validate() const {
  if (objective.size() != num_vars) {
    throw UsageError("objective has " + std::to_string(objective.size()) +
                     " coefficients, expected " + std::to_string(num_vars));
  }
  if (lower_bounds.size() != num_vars) {
    throw UsageError("lower bound list has wrong length");
  }
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    if (constraints[k].coefficients.size() != num_vars) {
      throw UsageError("constraint " + std::to_string(k) + " has " +
                       std::to_string(constraints[k].coefficients.size()) +
                       " coefficients, expected " + std::to_string(num_vars));
    }
  }
}

bool LinearProgram::IsFeasible(const std::vector<Rational>& x) const {
  if (x.size() != num_vars) return false;
  for (std::size_t j = 0; j < num_vars; ++j) {
    if (lower_bounds[j] && x[j] < *lower_bounds[j]) return false;
  }
  for (const auto& c : constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < num_vars; ++j) lhs += c.coefficients[j] * x[j];
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

Rational LinearProgram::ObjectiveValue(const std::vector<Rational>& x) const {
  Rational value;
  for (std::size_t j = 0; j < num_vars; ++j) value += objective[j] * x[j];
  return value;
}

std::string_view Name(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

LpResult Solve(const LinearProgram& lp) {
  lp.Validate();

  // Nonnegative structural columns.
  std::vector<ColumnMap> columns(lp.num_vars);
  std::size_t num_structural = 0;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    columns[j].positive = num_structural++;
    if (lp.lower_bounds[j]) {
      columns[j].shift = *lp.lower_bounds[j];
    } else {
      columns[j].negative = num_structural++;
    }
  }
  std::size_t num_slacks = 0;
  for (const auto& c : lp.constraints) {
    if (c.relation != Relation::kEqual) ++num_slacks;
  }

  // Rows over [structural | slack], rhs made nonnegative.
  const std::size_t m = lp.constraints.size();
  std::vector<std::vector<Rational>> rows(
      m, std::vector<Rational>(num_structural + num_slacks));
  std::vector<Rational> rhs(m);
  std::vector<bool> slack_is_basic(m, false);
  std::size_t slack = num_structural;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    rhs[r] = c.rhs;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
      const Rational& a = c.coefficients[j];
      if (sgn(a) == 0) continue;
      rows[r][columns[j].positive] += a;
      if (columns[j].negative) rows[r][*columns[j].negative] -= a;
      rhs[r] -= a * columns[j].shift;
    }
    std::optional<std::size_t> slack_col;
    if (c.relation == Relation::kLessEqual) {
      slack_col = slack++;
      rows[r][*slack_col] = 1;
    } else if (c.relation == Relation::kGreaterEqual) {
      slack_col = slack++;
      rows[r][*slack_col] = -1;
    }
    if (sgn(rhs[r]) < 0) {
      for (auto& v : rows[r]) v = -v;
      rhs[r] = -rhs[r];
    }
    slack_is_basic[r] = slack_col && sgn(rows[r][*slack_col]) > 0;
  }

  std::size_t num_artificial = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (!slack_is_basic[r]) ++num_artificial;
  }
  const std::size_t first_artificial = num_structural + num_slacks;
  const std::size_t total_cols = first_artificial + num_artificial;

  Tableau t(m, total_cols);
  std::size_t artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < first_artificial; ++c) t.at(r, c) = rows[r][c];
    t.rhs(r) = rhs[r];
    if (slack_is_basic[r]) {
      for (std::size_t c = num_structural; c < first_artificial; ++c) {
        if (sgn(rows[r][c]) > 0) t.basic(r) = c;
      }
    } else {
      t.at(r, artificial) = 1;
      t.basic(r) = artificial++;
    }
  }

  const std::uint64_t bound = BasisCountBound(total_cols, m);
  LpResult result;

  // Phase 1: drive the artificial variables to zero.
  std::vector<Rational> phase1_cost(total_cols);
  for (std::size_t c = first_artificial; c < total_cols; ++c) phase1_cost[c] = 1;
  RunPhase(t, phase1_cost, total_cols, bound);
  if (sgn(t.Cost(phase1_cost)) > 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  for (std::size_t r = 0; r < t.rows();) {
    if (t.basic(r) < first_artificial) {
      ++r;
      continue;
    }
    std::optional<std::size_t> replacement;
    for (std::size_t c = 0; c < first_artificial && !replacement; ++c) {
      if (sgn(t.at(r, c)) != 0) replacement = c;
    }
    if (replacement) {
      t.Pivot(r, *replacement);
      ++r;
    } else {
      t.EraseRow(r);  // redundant equality
    }
  }

  // Phase 2 on the original objective; artificial columns may not re-enter.
  std::vector<Rational> cost(total_cols);
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    cost[columns[j].positive] = lp.objective[j];
    if (columns[j].negative) cost[*columns[j].negative] = -lp.objective[j];
  }
  if (RunPhase(t, cost, first_artificial, bound) == PhaseOutcome::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  std::vector<Rational> y(total_cols);
  for (std::size_t r = 0; r < t.rows(); ++r) y[t.basic(r)] = t.rhs(r);
  result.solution.resize(lp.num_vars);
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    result.solution[j] = columns[j].shift + y[columns[j].positive];
    if (columns[j].negative) result.solution[j] -= y[*columns[j].negative];
  }
  if (!lp.IsFeasible(result.solution)) {
    throw std::logic_error("simplex produced an infeasible point");
  }
  result.status = LpStatus::kOptimal;
  result.value = lp.ObjectiveValue(result.solution);
  return result;
}

}  // namespace wef
