// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cli_cases.h"
#include "test_support.h"
#include "wef/envy_graph.h"
#include "wef/lp.h"
#include "wef/optimize.h"
#include "wef/transforms.h"

namespace wef {
namespace {

using testing::RandomFeasiblePairs;
using testing::RandomPair;

// Collects the first few failure notes of a criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

Rational Opt(const Instance& instance, const Allocation& allocation,
             ObjectiveKind kind, Engine engine = Engine::kDefault) {
  return OptForAllocation(instance, allocation, kind, engine).value;
}

Rational Opt(const Fixture& f, ObjectiveKind kind) {
  return Opt(f.instance, *f.allocation, kind);
}

std::string Str(const Rational& r) { return ToString(r); }

void IntroReproduction(Check& c) {
  const Fixture f = GenIntro();
  auto wef_at = [&](const Rational& x) {
    return IsWef(f.instance, *f.allocation, PaymentVector({x, -x}));
  };
  const Rational step(1, 1000);
  c.Expect(wef_at(10), "transfer 10 should be WEF");
  c.Expect(wef_at(15), "transfer 15 should be WEF");
  c.Expect(!wef_at(10 - step), "transfer 10 - 1/1000 should not be WEF");
  c.Expect(!wef_at(15 + step), "transfer 15 + 1/1000 should not be WEF");
  c.Expect(wef_at(Rational(25, 2)), "interior transfer should be WEF");
  c.Expect(Opt(f, ObjectiveKind::kP2) == 20, "minimal subsidy total");
  c.Expect(Opt(f, ObjectiveKind::kP3max) == 10, "balanced max negative");
}

void Lemma2aTightness(Check& c) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Rational& t : {Rational(1), Rational(6), Rational(7, 2)}) {
      const Fixture f = GenLemma2a(n, t);
      const std::string id = "n=" + std::to_string(n) + " T=" + Str(t);
      c.Expect(Opt(f, ObjectiveKind::kP1) == t, id + " P1");
      c.Expect(Opt(f, ObjectiveKind::kP2) == static_cast<long>(n - 1) * t,
               id + " P2");
    }
  }
}

void Lemma2bTightness(Check& c) {
  const std::vector<std::vector<Rational>> weight_sets = {{1, 2, 3},
                                                          {2, 3, 5, 7}};
  for (const auto& weights : weight_sets) {
    for (const Rational& t : {Rational(1), Rational(5)}) {
      const Fixture f = GenLemma2b(weights, t);
      const Rational expected =
          (f.instance.total_weight() - f.instance.min_weight()) * t;
      const std::string id =
          "W=" + Str(f.instance.total_weight()) + " T=" + Str(t);
      c.Expect(Opt(f, ObjectiveKind::kP1w) == t, id + " P1w");
      c.Expect(Opt(f, ObjectiveKind::kP2) == expected, id + " P2");
    }
  }
}

void SubsidyBalancedEquality(Check& c) {
  const auto pairs =
      RandomFeasiblePairs(200, 4, 5, WeightMode::kIntegerRange);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [inst, alloc] = pairs[k];
    const std::string id = "pair " + std::to_string(k);
    const Rational p2 = Opt(inst, alloc, ObjectiveKind::kP2);
    const OptResult norm = OptForAllocation(inst, alloc, ObjectiveKind::kP3norm,
                                            Engine::kLinearProgram);
    c.Expect(p2 == norm.value, id + " P2 vs P3norm");

    const PaymentVector balanced = Balance(inst, MinimalSubsidy(inst, alloc));
    for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
      c.Expect(-balanced[i] <= inst.weight(i) / inst.total_weight() * p2,
               id + " balanced minimal subsidy per-agent bound");
    }
    const SubsidyWithTotal back = BalancedToSubsidy(inst, norm.witness);
    c.Expect(back.total <= p2, id + " subsidy from P3norm witness");
    c.Expect(back.subsidy.Sum() == back.total, id + " subsidy total");
    c.Expect(IsWef(inst, alloc, back.subsidy), id + " subsidy WEF");
  }
}

void SingleItemBalancedMax(Check& c) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const Rational t(6);
    const Fixture f = GenLemma2a(n, t);
    c.Expect(Opt(f, ObjectiveKind::kP3max) ==
                 static_cast<long>(n - 1) * t / static_cast<long>(n),
             "n=" + std::to_string(n));
  }
}

void NegativePaymentBound(Check& c) {
  for (std::size_t n : {2, 4, 6}) {
    for (const Rational& t : {Rational(4), Rational(8)}) {
      const Fixture f = GenLemma5(n, t);
      c.Expect(Opt(f, ObjectiveKind::kP4) == static_cast<long>(n) * t / 4,
               "fixture n=" + std::to_string(n) + " T=" + Str(t));
    }
  }
  const auto pairs = RandomFeasiblePairs(200, 4, 5, WeightMode::kEqual);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [inst, alloc] = pairs[k];
    const Rational n = static_cast<long>(inst.num_agents());
    c.Expect(Opt(inst, alloc, ObjectiveKind::kP4) <=
                 n / 4 * Opt(inst, alloc, ObjectiveKind::kP1),
             "random pair " + std::to_string(k));
  }
}

void StrictnessRemarks(Check& c) {
  const Rational t(2);
  const Rational n(3);
  const Fixture p2 = GenRemarkP2(3, t);
  c.Expect(SearchAllocations(p2.instance, ObjectiveKind::kP1).value ==
               (n - 1) * t,
           "remark_p2 search-min P1");
  c.Expect(Opt(p2, ObjectiveKind::kP2) == (n - 1) * t, "remark_p2 P2");

  const Rational t5(8);
  const Fixture p5 = GenRemarkP5(3, t5);
  const Rational quarter = n * t5 / 4;
  c.Expect(Opt(p5, ObjectiveKind::kP4) == quarter, "remark_p5 P4");
  c.Expect(SearchAllocations(p5.instance, ObjectiveKind::kP1).value >=
               quarter * n / (n - 1),
           "remark_p5 search-min P1");
}

void EngineCrossCheck(Check& c) {
  const auto pairs =
      RandomFeasiblePairs(500, 4, 5, WeightMode::kIntegerRange, 1000);
  std::size_t oracle_runs = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [inst, alloc] = pairs[k];
    const std::string id = "pair " + std::to_string(k);
    for (ObjectiveKind kind : {ObjectiveKind::kP1, ObjectiveKind::kP1w,
                               ObjectiveKind::kP2, ObjectiveKind::kP3norm}) {
      c.Expect(Opt(inst, alloc, kind) ==
                   Opt(inst, alloc, kind, Engine::kLinearProgram),
               id + " " + std::string(Name(kind)));
    }
    for (ObjectiveKind kind : kAllObjectives) {
      const LinearProgram lp = BuildPaymentLp(inst, alloc, kind);
      if (!WithinOracleGuard(lp)) continue;
      ++oracle_runs;
      const LpResult fast = Solve(lp);
      const LpResult slow = VertexOracle(lp);
      c.Expect(fast.status == slow.status &&
                   (fast.status != LpStatus::kOptimal ||
                    fast.value == slow.value),
               id + " simplex vs oracle " + std::string(Name(kind)));
    }
  }
  c.Expect(oracle_runs >= 500, "oracle ran on too few programs");
}

void TransformProperties(Check& c) {
  Lcg64 rng(20240601);
  const auto pairs =
      RandomFeasiblePairs(1000, 4, 5, WeightMode::kIntegerRange, 5000);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [inst, alloc] = pairs[k];
    const std::string id = "tuple " + std::to_string(k);
    const PaymentVector p = testing::RandomWefPayments(inst, alloc, rng);
    const Rational z = testing::RandomRational(rng, 10);
    c.Expect(IsWef(inst, alloc, p), id + " generated payments WEF");
    c.Expect(IsWef(inst, alloc, Slide(inst, p, z)), id + " slide");
    c.Expect(Balance(inst, p).Sum() == 0, id + " balance sum");
    if (k < 200) {
      const PaymentVector balanced = Balance(inst, p);
      const SubsidyWithTotal s = BalancedToSubsidy(inst, balanced);
      c.Expect(Balance(inst, s.subsidy) == balanced, id + " round trip");
    }
  }
}

void CliGoldens(Check& c) {
  const std::string dir = WEF_GOLDEN_DIR;
  std::size_t gen = 0;
  for (const auto& cc : testing::CliCases()) {
    const auto run = testing::RunCase(cc, dir);
    c.Expect(run.exit_code == cc.exit_code, cc.name + " exit code");
    c.Expect(testing::ReadText(dir + "/" + cc.name + ".out") == run.out,
             cc.name + " output");
    if (cc.name.rfind("gen_", 0) == 0) ++gen;
  }
  c.Expect(gen == 7, "every fixture family has a generated golden");
}

}  // namespace
}  // namespace wef

int main() {
  const std::vector<std::pair<std::string, std::function<void(wef::Check&)>>>
      criteria = {
          {"intro transfer interval and optima", wef::IntroReproduction},
          {"single-item equal weights tightness", wef::Lemma2aTightness},
          {"single-item weighted tightness", wef::Lemma2bTightness},
          {"total subsidy equals normalized balanced optimum",
           wef::SubsidyBalancedEquality},
          {"balanced max negative payment on single-item instances",
           wef::SingleItemBalancedMax},
          {"total negative payment bound", wef::NegativePaymentBound},
          {"strictness fixtures", wef::StrictnessRemarks},
          {"closed forms, simplex and vertex oracle agree",
           wef::EngineCrossCheck},
          {"payment transform properties", wef::TransformProperties},
          {"command line goldens and exit codes", wef::CliGoldens},
      };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    wef::Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    std::printf("criterion %2zu: %s  %s (%zu checks, %.2fs)\n", k + 1,
                check.ok() ? "PASS" : "FAIL", criteria[k].first.c_str(),
                check.checks(), secs);
    for (const auto& note : check.failures()) {
      std::printf("    %s\n", note.c_str());
    }
    all = all && check.ok();
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
