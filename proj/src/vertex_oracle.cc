// Brute-force LP solver: every vertex of a pointed polyhedron is the unique
// solution of some k linearly independent tight rows, so enumerating row
// subsets finds the optimum whenever one exists. Shares nothing with the
// simplex path besides the LinearProgram type.

#include <optional>

#include "wef/lp.h"

namespace wef {
namespace {

struct Row {
  std::vector<Rational> a;
  Relation relation;
  Rational b;
};

bool Satisfies(const Row& row, const std::vector<Rational>& x) {
  Rational lhs;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(row.a[j]) != 0) lhs += row.a[j] * x[j];
  }
  switch (row.relation) {
    case Relation::kLessEqual: return lhs <= row.b;
    case Relation::kEqual: return lhs == row.b;
    case Relation::kGreaterEqual: return lhs >= row.b;
  }
  return false;
}

// Basis of {d : a . d = 0 for every row}, via reduced row echelon form.
std::vector<std::vector<Rational>> NullSpace(const std::vector<Row>& rows,
                                             std::size_t k) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) m.push_back(r.a);
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < m.size(); ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = rank; r < m.size() && !pivot; ++r) {
      if (sgn(m[r][col]) != 0) pivot = r;
    }
    if (!pivot) continue;
    std::swap(m[rank], m[*pivot]);
    const Rational p = m[rank][col];
    for (auto& v : m[rank]) v /= p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < k; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(k, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> d(k);
    d[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) d[pivot_cols[r]] = -m[r][free];
    basis.push_back(std::move(d));
  }
  return basis;
}

struct Vertex {
  std::vector<Rational> x;
  Rational value;
};

class VertexEnumerator {
 public:
  VertexEnumerator(const std::vector<Row>& rows, std::size_t k,
                   const std::vector<Rational>& cost, bool stop_at_first)
      : rows_(rows), k_(k), cost_(cost), stop_at_first_(stop_at_first) {}

  // Equality rows are tight everywhere, so every vertex has a basis that
  // extends an independent subset of them; only inequalities are chosen.
  std::optional<Vertex> Run() {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].relation == Relation::kEqual) {
        if (echelon_.size() < k_) Push(rows_[r]);
      } else {
        free_.push_back(r);
      }
    }
    if (echelon_.size() == k_) {
      Consider(SolveEchelon());
    } else {
      Descend(0);
    }
    return best_;
  }

 private:
  struct EchelonRow {
    std::vector<Rational> a;
    Rational b;
    std::size_t pivot;
  };

  bool Done() const { return stop_at_first_ && best_.has_value(); }

  // Reduces `row` against the echelon and appends it; false if dependent.
  bool Push(const Row& row) {
    EchelonRow e{row.a, row.b, 0};
    for (const auto& prev : echelon_) {
      if (sgn(e.a[prev.pivot]) == 0) continue;
      const Rational f = e.a[prev.pivot] / prev.a[prev.pivot];
      for (std::size_t c = prev.pivot; c < k_; ++c) {
        if (sgn(prev.a[c]) != 0) e.a[c] -= f * prev.a[c];
      }
      e.b -= f * prev.b;
    }
    std::optional<std::size_t> pivot;
    for (std::size_t c = 0; c < k_ && !pivot; ++c) {
      if (sgn(e.a[c]) != 0) pivot = c;
    }
    if (!pivot) return false;
    e.pivot = *pivot;
    echelon_.push_back(std::move(e));
    return true;
  }

  void Descend(std::size_t start) {
    if (echelon_.size() + 1 == k_) {
      SweepLine(start);
      return;
    }
    for (std::size_t f = start; f < free_.size() && !Done(); ++f) {
      if (free_.size() - f < k_ - echelon_.size()) return;
      if (!Push(rows_[free_[f]])) continue;
      Descend(f + 1);
      echelon_.pop_back();
    }
  }

  // With k - 1 rows chosen the solutions form a line x0 + t d. Each row is
  // reduced to alpha + t beta (rel) 0 once; then every remaining candidate
  // row pins t, and the vertex is feasible iff t lies in the common range.
  void SweepLine(std::size_t start) {
    std::vector<bool> is_pivot(k_, false);
    for (const auto& e : echelon_) is_pivot[e.pivot] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rational> x0(k_), d(k_);
    d[free_col] = 1;
    for (std::size_t i = echelon_.size(); i-- > 0;) {
      const auto& e = echelon_[i];
      Rational rx = e.b, rd;
      for (std::size_t c = 0; c < k_; ++c) {
        if (c == e.pivot || sgn(e.a[c]) == 0) continue;
        rx -= e.a[c] * x0[c];
        rd -= e.a[c] * d[c];
      }
      x0[e.pivot] = rx / e.a[e.pivot];
      d[e.pivot] = rd / e.a[e.pivot];
    }

    std::optional<Rational> lo, hi;
    std::vector<Rational> alpha(rows_.size()), beta(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Row& row = rows_[r];
      alpha[r] = -row.b;
      for (std::size_t c = 0; c < k_; ++c) {
        if (sgn(row.a[c]) == 0) continue;
        alpha[r] += row.a[c] * x0[c];
        beta[r] += row.a[c] * d[c];
      }
      // alpha + t beta <= 0, written as a bound on t.
      auto upper_form = [&](const Rational& a, const Rational& b) {
        if (sgn(b) == 0) return sgn(a) <= 0;
        const Rational bound = -a / b;
        if (sgn(b) > 0) {
          if (!hi || bound < *hi) hi = bound;
        } else {
          if (!lo || bound > *lo) lo = bound;
        }
        return true;
      };
      bool ok = true;
      if (row.relation != Relation::kGreaterEqual) {
        ok = upper_form(alpha[r], beta[r]);
      }
      if (ok && row.relation != Relation::kLessEqual) {
        ok = upper_form(-alpha[r], -beta[r]);
      }
      if (!ok || (lo && hi && *lo > *hi)) return;
    }

    Rational cost_x0, cost_d;
    for (std::size_t c = 0; c < k_; ++c) {
      cost_x0 += cost_[c] * x0[c];
      cost_d += cost_[c] * d[c];
    }
    for (std::size_t f = start; f < free_.size() && !Done(); ++f) {
      const std::size_t r = free_[f];
      if (sgn(beta[r]) == 0) continue;  // dependent on rows already chosen
      const Rational t = -alpha[r] / beta[r];
      if ((lo && t < *lo) || (hi && t > *hi)) continue;
      const Rational value = cost_x0 + t * cost_d;
      if (best_ && !(value < best_->value)) continue;
      std::vector<Rational> x(k_);
      for (std::size_t c = 0; c < k_; ++c) x[c] = x0[c] + t * d[c];
      best_ = Vertex{std::move(x), value};
    }
  }

  // Row i of the echelon vanishes on the pivots of rows before it, and with
  // k rows every column is a pivot, so back substitution from the last row
  // solves the system.
  std::vector<Rational> SolveEchelon() const {
    std::vector<Rational> x(k_);
    for (std::size_t i = echelon_.size(); i-- > 0;) {
      const auto& e = echelon_[i];
      Rational rest = e.b;
      for (std::size_t later = i + 1; later < echelon_.size(); ++later) {
        const std::size_t c = echelon_[later].pivot;
        if (sgn(e.a[c]) != 0) rest -= e.a[c] * x[c];
      }
      x[e.pivot] = rest / e.a[e.pivot];
    }
    return x;
  }

  void Consider(std::vector<Rational> x) {
    for (const auto& row : rows_) {
      if (!Satisfies(row, x)) return;
    }
    Rational value;
    for (std::size_t j = 0; j < k_; ++j) value += cost_[j] * x[j];
    if (!best_ || value < best_->value) best_ = Vertex{std::move(x), value};
  }

  const std::vector<Row>& rows_;
  std::size_t k_;
  const std::vector<Rational>& cost_;
  bool stop_at_first_;
  std::vector<std::size_t> free_;  // indices of the inequality rows
  std::vector<EchelonRow> echelon_;
  std::optional<Vertex> best_;
};

}  // namespace

bool WithinOracleGuard(const LinearProgram& lp) {
  return lp.num_vars <= kOracleMaxVars &&
         lp.constraints.size() <= kOracleMaxConstraints;
}

LpResult VertexOracle(const LinearProgram& lp) {
  lp.Validate();
  if (!WithinOracleGuard(lp)) {
    throw UsageError("vertex oracle limited to " +
                     std::to_string(kOracleMaxVars) + " variables and " +
                     std::to_string(kOracleMaxConstraints) + " constraints");
  }
  const std::size_t k = lp.num_vars;
  std::vector<Row> rows;
  for (const auto& c : lp.constraints) {
    rows.push_back({c.coefficients, c.relation, c.rhs});
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (!lp.lower_bounds[j]) continue;
    std::vector<Rational> a(k);
    a[j] = 1;
    rows.push_back({std::move(a), Relation::kGreaterEqual, *lp.lower_bounds[j]});
  }

  // Pin the lineality space so the polyhedron becomes pointed.
  const auto lineality = NullSpace(rows, k);
  bool objective_moves_along_lineality = false;
  for (const auto& d : lineality) {
    Rational dot;
    for (std::size_t j = 0; j < k; ++j) dot += lp.objective[j] * d[j];
    if (sgn(dot) != 0) objective_moves_along_lineality = true;
    rows.push_back({d, Relation::kEqual, Rational(0)});
  }

  LpResult result;
  auto best = VertexEnumerator(rows, k, lp.objective, false).Run();
  if (!best) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  if (objective_moves_along_lineality) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  // Recession directions d with objective . d = -1; any vertex of that set
  // means the objective decreases without bound.
  std::vector<Row> recession;
  for (const auto& row : rows) recession.push_back({row.a, row.relation, 0});
  recession.push_back({lp.objective, Relation::kEqual, Rational(-1)});
  const std::vector<Rational> no_cost(k);
  if (VertexEnumerator(recession, k, no_cost, true).Run()) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  result.status = LpStatus::kOptimal;
  result.value = best->value;
  result.solution = std::move(best->x);
  return result;
}

}  // namespace wef
