#ifndef WEF_FIXTURES_H_
#define WEF_FIXTURES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wef/model.h"
#include "wef/optimize.h"

namespace wef {

// A generated instance with its designated allocation and payment vector and
// the exact values the construction is known to produce. Expectation keys
// are objective names ("P2", ...) evaluated on the designated allocation,
// plus "search_min_P1" (minimum of OPT_P1 over all allocations) and
// "search_min_P1_at_least" (a lower bound on that minimum).
struct Fixture {
  std::string family;
  Instance instance;
  std::optional<Allocation> allocation;
  std::optional<PaymentVector> payments;
  std::map<std::string, Rational> expected;
};

// Alice (agent 0) and George (agent 1), one item worth 20 and 30; the item
// goes to George, who pays 15 to Alice.
Fixture GenIntro();

// n equal agents, one item worth T to all, given to agent 0.
Fixture GenLemma2a(std::size_t n, const Rational& t);

// One item worth w_min * T to all, given to the lowest-index lightest agent.
Fixture GenLemma2b(std::vector<Rational> weights, const Rational& t);

// n equal agents, n - 1 items worth (n - 1) T, one each to agents 0..n-2.
Fixture GenRemarkP2(std::size_t n, const Rational& t);

// n (even) equal agents, n / 2 items worth T, one each to agents 0..n/2-1.
Fixture GenLemma5(std::size_t n, const Rational& t);

// n equal agents, n - 1 items worth (nT/4) n/(n-1), one each to agents
// 0..n-2.
Fixture GenRemarkP5(std::size_t n, const Rational& t);

// Deterministic 64-bit LCG (Knuth's MMIX constants):
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//   output  = state >> 33
//   Uniform(lo, hi) = lo + output % (hi - lo + 1)
// Seeding sets state = seed.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 33;
  }
  std::uint64_t Uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + Next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::size_t kRandomMaxAgents = 6;
inline constexpr std::size_t kRandomMaxItems = 8;
inline constexpr int kRandomMaxWeight = 4;

// Draw order from Lcg64(seed): weights (integer-range mode only, each
// Uniform(1, 4)), then valuations row by row, each Uniform(0, max_value).
Instance GenRandom(std::uint64_t seed, std::size_t n, std::size_t m,
                   int max_value, WeightMode mode);

// GenRandom followed by a designated allocation from the same generator:
// up to 64 draws of owner[o] = Uniform(0, n - 1); the first WEF-feasible draw
// wins. If none is feasible, the first feasible allocation in search order is
// used; if there is none at all the fixture has no allocation. The
// designated payments are the minimal subsidy, and the expectations record
// its P1, P1w and P2 values.
Fixture GenRandomFixture(std::uint64_t seed, std::size_t n, std::size_t m,
                         int max_value, WeightMode mode);

}  // namespace wef

#endif  // WEF_FIXTURES_H_
