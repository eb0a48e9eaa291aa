#include <omp.h>

#include <exception>
#include <optional>

#include "wef/envy_graph.h"
#include "wef/optimize.h"

namespace wef {
namespace {

struct Candidate {
  Rational value;
  std::uint64_t index = 0;
};

bool Better(const Candidate& a, const std::optional<Candidate>& b) {
  return !b || a.value < b->value || (a.value == b->value && a.index < b->index);
}

// Objective value for one allocation, or nullopt when it is infeasible.
// Closed-form objectives come straight from the longest-path labels.
std::optional<Rational> Evaluate(const Instance& instance,
                                 const Allocation& allocation,
                                 ObjectiveKind objective) {
  const auto longest =
      TryLongestPathsFrom(EnvyGraph::Build(instance, allocation));
  if (!longest) return std::nullopt;
  Rational value;
  switch (objective) {
    case ObjectiveKind::kP1:
      for (AgentIndex i = 0; i < longest->size(); ++i) {
        value = std::max<Rational>(value, instance.weight(i) * (*longest)[i]);
      }
      return value;
    case ObjectiveKind::kP1w:
      for (const auto& l : *longest) value = std::max(value, l);
      return value;
    case ObjectiveKind::kP2:
    case ObjectiveKind::kP3norm:
      for (AgentIndex i = 0; i < longest->size(); ++i) {
        value += instance.weight(i) * (*longest)[i];
      }
      return value;
    default:
      return OptForAllocation(instance, allocation, objective).value;
  }
}

std::uint64_t CheckedCount(const Instance& instance) {
  const auto count =
      AllocationCount(instance.num_agents(), instance.num_items());
  if (!count) {
    throw UsageError("search space n^m exceeds " + std::to_string(kSearchLimit) +
                     " allocations");
  }
  return *count;
}

SearchResult Finish(const Instance& instance, ObjectiveKind objective,
                    const std::optional<Candidate>& best,
                    std::uint64_t examined, std::uint64_t feasible) {
  SearchResult result;
  result.examined = examined;
  result.feasible = feasible;
  if (!best) return result;
  result.found = true;
  result.value = best->value;
  result.index = best->index;
  result.allocation = AllocationAt(best->index, instance.num_agents(),
                                   instance.num_items());
  result.witness =
      OptForAllocation(instance, result.allocation, objective).witness;
  return result;
}

}  // namespace

std::optional<std::uint64_t> AllocationCount(std::size_t num_agents,
                                             std::size_t num_items) {
  std::uint64_t count = 1;
  for (std::size_t o = 0; o < num_items; ++o) {
    if (num_agents != 0 && count > kSearchLimit / num_agents) {
      return std::nullopt;
    }
    count *= num_agents;
  }
  if (count > kSearchLimit) return std::nullopt;
  return count;
}

Allocation AllocationAt(std::uint64_t index, std::size_t num_agents,
                        std::size_t num_items) {
  std::vector<AgentIndex> owner(num_items);
  for (std::size_t o = num_items; o-- > 0;) {
    owner[o] = index % num_agents;
    index /= num_agents;
  }
  return Allocation(std::move(owner));
}

SearchResult SearchAllocationsSerial(const Instance& instance,
                                     ObjectiveKind objective) {
  const std::uint64_t count = CheckedCount(instance);
  std::optional<Candidate> best;
  std::uint64_t feasible = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const Allocation allocation =
        AllocationAt(k, instance.num_agents(), instance.num_items());
    auto value = Evaluate(instance, allocation, objective);
    if (!value) continue;
    ++feasible;
    Candidate c{std::move(*value), k};
    if (Better(c, best)) best = std::move(c);
  }
  return Finish(instance, objective, best, count, feasible);
}

SearchResult SearchAllocations(const Instance& instance,
                               ObjectiveKind objective) {
  const std::uint64_t count = CheckedCount(instance);
  const auto signed_count = static_cast<std::int64_t>(count);
  std::optional<Candidate> best;
  std::uint64_t feasible = 0;
  std::exception_ptr failure;

#pragma omp parallel
  {
    std::optional<Candidate> local_best;
    std::uint64_t local_feasible = 0;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t k = 0; k < signed_count; ++k) {
      try {
        const auto index = static_cast<std::uint64_t>(k);
        const Allocation allocation =
            AllocationAt(index, instance.num_agents(), instance.num_items());
        auto value = Evaluate(instance, allocation, objective);
        if (!value) continue;
        ++local_feasible;
        Candidate c{std::move(*value), index};
        if (Better(c, local_best)) local_best = std::move(c);
      } catch (...) {
#pragma omp critical(wef_search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(wef_search_merge)
    {
      feasible += local_feasible;
      if (local_best && Better(*local_best, best)) best = std::move(local_best);
    }
  }
  if (failure) std::rethrow_exception(failure);
  return Finish(instance, objective, best, count, feasible);
}

}  // namespace wef
