#ifndef WEF_OPTIMIZE_H_
#define WEF_OPTIMIZE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wef/model.h"
#include "wef/objective.h"

namespace wef {

enum class Engine {
  kDefault,        // closed forms for P1, P1w, P2, P3norm; LP for the rest
  kLinearProgram,  // LP for everything
};

struct OptResult {
  Rational value;
  PaymentVector witness;
};

// Exact optimum of `objective` over the objective's payment class for the
// fixed allocation. Throws InfeasibleAllocation (with the positive cycle)
// when no payment vector makes the allocation WEF.
OptResult OptForAllocation(const Instance& instance,
                           const Allocation& allocation,
                           ObjectiveKind objective,
                           Engine engine = Engine::kDefault);

// --- exhaustive search over allocations -----------------------------------

inline constexpr std::uint64_t kSearchLimit = 10'000'000;

// n^m, or nullopt if it exceeds kSearchLimit.
std::optional<std::uint64_t> AllocationCount(std::size_t num_agents,
                                             std::size_t num_items);

// Enumeration order: index k in [0, n^m) maps to the owner vector whose
// base-n digits, item 0 most significant, spell k. That is lexicographic
// order on owner vectors.
Allocation AllocationAt(std::uint64_t index, std::size_t num_agents,
                        std::size_t num_items);

struct SearchResult {
  bool found = false;  // false iff every allocation is infeasible
  Rational value;
  std::uint64_t index = 0;
  Allocation allocation;
  PaymentVector witness;
  std::uint64_t examined = 0;
  std::uint64_t feasible = 0;
};

// Minimum of the objective over all allocations; ties go to the smallest
// enumeration index. Throws UsageError if n^m > kSearchLimit.
SearchResult SearchAllocations(const Instance& instance,
                               ObjectiveKind objective);
// Single-threaded reference; returns exactly what SearchAllocations does.
SearchResult SearchAllocationsSerial(const Instance& instance,
                                     ObjectiveKind objective);

// --- bound verifier ------------------------------------------------------

struct BoundsRow {
  std::string name;
  std::string statement;
  Rational lhs;
  Rational rhs;
  bool equality = false;  // row asserts lhs == rhs instead of lhs <= rhs
  bool holds = false;
  bool tight = false;
};

struct BoundsReport {
  std::vector<BoundsRow> rows;
  bool AllHold() const;
};

// Rows L2a, L2b, L3, L4a, L4b and, for equal weights only, L5. The per-agent
// payment inequalities are folded into one scalar comparison each:
//   L4a: max_i (W / w_i)(-p_i) <= (n - 1) OPT_P1
//   L4b: max_i (-p_i) / w_i   <= (1 - w_min / W) OPT_P1w
// where p = Balance(MinimalSubsidy).
BoundsReport CheckBounds(const Instance& instance,
                         const Allocation& allocation);

// --- exploration of the open relations ------------------------------------

enum class WeightMode { kEqual, kIntegerRange };

struct ExploreConfig {
  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::size_t num_agents = 3;
  std::size_t num_items = 4;
  int max_value = 10;
  WeightMode weight_mode = WeightMode::kEqual;
  bool include_fixtures = true;
};

struct ExploreRow {
  std::string id;
  Rational p1, p2, p4, p5sum, p5max;
  // Ratios to OPT_P2; absent when OPT_P2 == 0.
  std::optional<Rational> p4_over_p2, p5sum_over_p2, p5max_over_p2;
};

// Data only: no relation between P4/P5 and the others is asserted.
std::vector<ExploreRow> ExploreOpen(const ExploreConfig& config);

}  // namespace wef

#endif  // WEF_OPTIMIZE_H_
