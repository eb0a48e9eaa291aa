#include "wef/cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wef/envy_graph.h"
#include "wef/fixtures.h"
#include "wef/instance_file.h"
#include "wef/optimize.h"
#include "wef/transforms.h"

namespace wef {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string payments;
  std::string objective;
  std::string kind;
  std::string z = "0";
  std::string engine = "default";
  bool json = false;
  bool serial = false;

  // gen / explore
  std::string family;
  std::size_t n = 3;
  std::size_t m = 4;
  std::string t = "1";
  std::string weights;
  std::uint64_t seed = 42;
  int max_value = 10;
  std::string weight_mode = "integer";
  std::string out_path;
  std::size_t count = 10;
  bool no_fixtures = false;
};

std::string Render(const std::vector<Rational>& values) {
  std::string text = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) text += ", ";
    text += ToString(values[k]);
  }
  return text + "]";
}

std::string Render(const std::vector<AgentIndex>& owner) {
  std::string text = "[";
  for (std::size_t k = 0; k < owner.size(); ++k) {
    if (k) text += ", ";
    text += std::to_string(owner[k]);
  }
  return text + "]";
}

Json ToJson(const std::vector<Rational>& values) {
  Json array = Json::array();
  for (const auto& v : values) array.push_back(ToString(v));
  return array;
}

Json ToJson(const Classification& c) {
  return Json{{"balanced", c.balanced}, {"subsidy", c.subsidy}};
}

std::vector<Rational> ParseRationalList(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
    values.push_back(ParseRational(token));
  }
  return values;
}

WeightMode ParseWeightMode(const std::string& text) {
  if (text == "equal") return WeightMode::kEqual;
  if (text == "integer") return WeightMode::kIntegerRange;
  throw UsageError("weight mode must be 'equal' or 'integer'");
}

const Allocation& RequireAllocation(const InstanceDocument& doc) {
  if (!doc.allocation) throw UsageError("instance file has no allocation");
  return *doc.allocation;
}

const PaymentVector& RequirePayments(const InstanceDocument& doc) {
  if (!doc.payments) throw UsageError("instance file has no payments");
  return *doc.payments;
}

void ReportInfeasible(const InfeasibleAllocation& e, bool json,
                      std::ostream& out, std::ostream& err) {
  if (json) {
    Json cycle = Json::array();
    for (AgentIndex a : e.witness().cycle) cycle.push_back(a);
    out << Json{{"feasible", false},
                {"cycle", cycle},
                {"cycle_weight", ToString(e.witness().cycle_weight)}}
                   .dump(2)
        << "\n";
  }
  err << e.what() << "\n";
}

int CmdCheck(const Options& o, std::ostream& out) {
  InstanceDocument doc = ReadInstanceFile(o.file);
  const Allocation& allocation = RequireAllocation(doc);
  PaymentVector payments = o.payments.empty()
                               ? RequirePayments(doc)
                               : PaymentVector(ParseRationalList(o.payments));
  const auto witness = CheckWef(doc.instance, allocation, payments);
  const Classification c = Classify(payments);
  if (o.json) {
    Json report{{"wef", !witness}, {"classification", ToJson(c)},
                {"payments", ToJson(payments.values)}};
    if (witness) {
      report["witness"] = Json{{"envious", witness->envious},
                               {"envied", witness->envied},
                               {"deficit", ToString(witness->deficit)}};
    } else {
      report["witness"] = nullptr;
    }
    out << report.dump(2) << "\n";
  } else {
    out << (witness ? "not WEF, " : "WEF, ") << c.Label() << "\n";
    out << "payments: " << Render(payments.values) << "\n";
    if (witness) {
      out << "witness: agent " << witness->envious << " envies agent "
          << witness->envied << ", deficit " << ToString(witness->deficit)
          << " per unit of entitlement\n";
    }
  }
  return witness ? kExitNegative : kExitOk;
}

int CmdOpt(const Options& o, std::ostream& out) {
  InstanceDocument doc = ReadInstanceFile(o.file);
  const ObjectiveKind objective = ParseObjective(o.objective);
  Engine engine = Engine::kDefault;
  if (o.engine == "lp") {
    engine = Engine::kLinearProgram;
  } else if (o.engine != "default") {
    throw UsageError("engine must be 'default' or 'lp'");
  }
  const OptResult result =
      OptForAllocation(doc.instance, RequireAllocation(doc), objective, engine);
  const Classification c = Classify(result.witness);
  if (o.json) {
    out << Json{{"objective", std::string(Name(objective))},
                {"value", ToString(result.value)},
                {"decimal", ToDecimal(result.value)},
                {"witness", ToJson(result.witness.values)},
                {"classification", ToJson(c)}}
               .dump(2)
        << "\n";
  } else {
    out << "objective: " << Name(objective) << "\n"
        << "value: " << ToString(result.value) << "\n"
        << "decimal: " << ToDecimal(result.value) << "\n"
        << "witness: " << Render(result.witness.values) << "\n"
        << "classification: " << c.Label() << "\n";
  }
  return kExitOk;
}

int CmdSearch(const Options& o, std::ostream& out, std::ostream& err) {
  InstanceDocument doc = ReadInstanceFile(o.file);
  const ObjectiveKind objective = ParseObjective(o.objective);
  const SearchResult result = o.serial
                                  ? SearchAllocationsSerial(doc.instance, objective)
                                  : SearchAllocations(doc.instance, objective);
  if (o.json) {
    Json report{{"objective", std::string(Name(objective))},
                {"found", result.found},
                {"examined", result.examined},
                {"feasible", result.feasible}};
    if (result.found) {
      report["value"] = ToString(result.value);
      report["decimal"] = ToDecimal(result.value);
      report["allocation"] = result.allocation.owner();
      report["witness"] = ToJson(result.witness.values);
    }
    out << report.dump(2) << "\n";
  } else {
    out << "objective: " << Name(objective) << "\n";
    if (result.found) {
      out << "value: " << ToString(result.value) << "\n"
          << "decimal: " << ToDecimal(result.value) << "\n"
          << "allocation: " << Render(result.allocation.owner()) << "\n"
          << "witness: " << Render(result.witness.values) << "\n";
    }
    out << "allocations: " << result.examined << " examined, "
        << result.feasible << " feasible\n";
  }
  if (!result.found) {
    err << "no allocation admits WEF payments\n";
    return kExitNegative;
  }
  return kExitOk;
}

int CmdTransform(const Options& o, std::ostream& out) {
  InstanceDocument doc = ReadInstanceFile(o.file);
  const PaymentVector& input = RequirePayments(doc);
  PaymentVector output;
  std::optional<Rational> total;
  if (o.kind == "slide") {
    output = Slide(doc.instance, input, ParseRational(o.z));
  } else if (o.kind == "balance") {
    output = Balance(doc.instance, input);
  } else if (o.kind == "normalize") {
    output = NormalizeSubsidy(doc.instance, input);
  } else if (o.kind == "to-subsidy") {
    auto converted = BalancedToSubsidy(doc.instance, input);
    output = std::move(converted.subsidy);
    total = std::move(converted.total);
  } else {
    throw UsageError("transform kind must be slide, balance, normalize or "
                     "to-subsidy");
  }

  std::optional<bool> input_wef, output_wef;
  if (doc.allocation) {
    input_wef = IsWef(doc.instance, *doc.allocation, input);
    output_wef = IsWef(doc.instance, *doc.allocation, output);
    if (*input_wef != *output_wef) {
      throw std::logic_error("transform changed the WEF status");
    }
  }
  if (o.json) {
    Json report{{"kind", o.kind},
                {"input", ToJson(input.values)},
                {"input_classification", ToJson(Classify(input))},
                {"output", ToJson(output.values)},
                {"output_classification", ToJson(Classify(output))}};
    if (total) report["T"] = ToString(*total);
    if (input_wef) {
      report["input_wef"] = *input_wef;
      report["output_wef"] = *output_wef;
    }
    out << report.dump(2) << "\n";
  } else {
    out << "kind: " << o.kind << "\n"
        << "input: " << Render(input.values) << " ("
        << Classify(input).Label() << ")\n"
        << "output: " << Render(output.values) << " ("
        << Classify(output).Label() << ")\n";
    if (total) out << "T: " << ToString(*total) << "\n";
    if (input_wef) {
      out << "WEF: input " << (*input_wef ? "yes" : "no") << ", output "
          << (*output_wef ? "yes" : "no") << " (preserved)\n";
    } else {
      out << "WEF: not checked (no allocation)\n";
    }
  }
  return kExitOk;
}

// Left-aligned text table with two spaces between columns.
void PrintTable(const std::vector<std::vector<std::string>>& rows,
                std::ostream& out) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

int CmdBounds(const Options& o, std::ostream& out) {
  InstanceDocument doc = ReadInstanceFile(o.file);
  const BoundsReport report = CheckBounds(doc.instance, RequireAllocation(doc));
  if (o.json) {
    Json rows = Json::array();
    for (const auto& r : report.rows) {
      rows.push_back(Json{{"name", r.name},
                          {"statement", r.statement},
                          {"lhs", ToString(r.lhs)},
                          {"rhs", ToString(r.rhs)},
                          {"holds", r.holds},
                          {"tight", r.tight}});
    }
    out << Json{{"all_hold", report.AllHold()}, {"rows", rows}}.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> table = {
        {"row", "statement", "lhs", "rhs", "holds", "tight"}};
    for (const auto& r : report.rows) {
      table.push_back({r.name, r.statement, ToString(r.lhs), ToString(r.rhs),
                       r.holds ? "yes" : "NO", r.tight ? "yes" : "no"});
    }
    PrintTable(table, out);
  }
  return report.AllHold() ? kExitOk : kExitNegative;
}

int CmdGen(const Options& o, std::ostream& out) {
  const Rational t = ParseRational(o.t);
  std::optional<Fixture> fixture;
  if (o.family == "intro") {
    fixture = GenIntro();
  } else if (o.family == "lemma2a") {
    fixture = GenLemma2a(o.n, t);
  } else if (o.family == "lemma2b") {
    if (o.weights.empty()) throw UsageError("lemma2b needs --weights");
    fixture = GenLemma2b(ParseRationalList(o.weights), t);
  } else if (o.family == "remark_p2") {
    fixture = GenRemarkP2(o.n, t);
  } else if (o.family == "lemma5") {
    fixture = GenLemma5(o.n, t);
  } else if (o.family == "remark_p5") {
    fixture = GenRemarkP5(o.n, t);
  } else if (o.family == "random") {
    fixture = GenRandomFixture(o.seed, o.n, o.m, o.max_value,
                               ParseWeightMode(o.weight_mode));
  } else {
    throw UsageError("unknown family '" + o.family +
                     "' (intro, lemma2a, lemma2b, remark_p2, lemma5, "
                     "remark_p5, random)");
  }
  const std::string text = WriteInstanceDocument(*fixture);
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path);
    if (!file) throw UsageError("cannot write '" + o.out_path + "'");
    file << text;
  }
  return kExitOk;
}

std::string RatioCell(const std::optional<Rational>& r) {
  if (!r) return "-";
  return ToString(*r) + " (" + ToDecimal(*r) + ")";
}

int CmdExplore(const Options& o, std::ostream& out) {
  ExploreConfig config;
  config.seed = o.seed;
  config.count = o.count;
  config.num_agents = o.n;
  config.num_items = o.m;
  config.max_value = o.max_value;
  config.weight_mode = ParseWeightMode(o.weight_mode);
  config.include_fixtures = !o.no_fixtures;
  const auto rows = ExploreOpen(config);
  if (o.json) {
    Json array = Json::array();
    auto ratio = [](const std::optional<Rational>& r) -> Json {
      return r ? Json(ToString(*r)) : Json(nullptr);
    };
    for (const auto& r : rows) {
      array.push_back(Json{{"id", r.id},
                           {"P1", ToString(r.p1)},
                           {"P2", ToString(r.p2)},
                           {"P4", ToString(r.p4)},
                           {"P5sum", ToString(r.p5sum)},
                           {"P5max", ToString(r.p5max)},
                           {"P4/P2", ratio(r.p4_over_p2)},
                           {"P5sum/P2", ratio(r.p5sum_over_p2)},
                           {"P5max/P2", ratio(r.p5max_over_p2)}});
    }
    out << array.dump(2) << "\n";
    return kExitOk;
  }
  std::vector<std::vector<std::string>> table = {
      {"id", "P1", "P2", "P4", "P5sum", "P5max", "P4/P2", "P5sum/P2",
       "P5max/P2"}};
  for (const auto& r : rows) {
    table.push_back({r.id, ToString(r.p1), ToString(r.p2), ToString(r.p4),
                     ToString(r.p5sum), ToString(r.p5max),
                     RatioCell(r.p4_over_p2), RatioCell(r.p5sum_over_p2),
                     RatioCell(r.p5max_over_p2)});
  }
  PrintTable(table, out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Weighted envy-free allocations with monetary transfers"};
  app.name(args.empty() ? "wef" : args.front());
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Check WEF and classify payments");
  check->add_option("file", o.file, "Instance file")->required();
  check->add_option("--payments", o.payments,
                    "Comma-separated payments overriding the file");
  check->add_flag("--json", o.json, "Machine-readable output");

  const std::string objective_help =
      "P1, P1w, P2, P3max, P3norm, P4, P5sum or P5max";
  auto* opt = app.add_subcommand("opt", "Optimal payments for the allocation");
  opt->add_option("file", o.file, "Instance file")->required();
  opt->add_option("--objective", o.objective, objective_help)->required();
  opt->add_option("--engine", o.engine, "default or lp");
  opt->add_flag("--json", o.json, "Machine-readable output");

  auto* search = app.add_subcommand("search", "Best allocation, exhaustively");
  search->add_option("file", o.file, "Instance file")->required();
  search->add_option("--objective", o.objective, objective_help)->required();
  search->add_flag("--serial", o.serial, "Use the single-threaded reference");
  search->add_flag("--json", o.json, "Machine-readable output");

  auto* transform = app.add_subcommand("transform", "Transform payments");
  transform->add_option("file", o.file, "Instance file")->required();
  transform->add_option("--kind", o.kind, "slide, balance, normalize, to-subsidy")
      ->required();
  transform->add_option("--z", o.z, "Slide amount per unit of weight");
  transform->add_flag("--json", o.json, "Machine-readable output");

  auto* bounds = app.add_subcommand("bounds", "Verify the bound relations");
  bounds->add_option("file", o.file, "Instance file")->required();
  bounds->add_flag("--json", o.json, "Machine-readable output");

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--family", o.family,
                  "intro, lemma2a, lemma2b, remark_p2, lemma5, remark_p5, "
                  "random")
      ->required();
  gen->add_option("--n", o.n, "Number of agents");
  gen->add_option("--T", o.t, "Bound parameter T (rational)");
  gen->add_option("--weights", o.weights, "Comma-separated weights (lemma2b)");
  gen->add_option("--seed", o.seed, "Seed (random)");
  gen->add_option("--m", o.m, "Number of items (random)");
  gen->add_option("--max-value", o.max_value, "Largest item value (random)");
  gen->add_option("--weight-mode", o.weight_mode, "equal or integer (random)");
  gen->add_option("--out", o.out_path, "Output path (default: stdout)");

  auto* explore = app.add_subcommand("explore", "Tabulate P2, P4 and P5 values");
  explore->add_option("--seed", o.seed, "First seed");
  explore->add_option("--count", o.count, "Number of random instances");
  explore->add_option("--n", o.n, "Number of agents");
  explore->add_option("--m", o.m, "Number of items");
  explore->add_option("--max-value", o.max_value, "Largest item value");
  explore->add_option("--weight-mode", o.weight_mode, "equal or integer");
  explore->add_flag("--no-fixtures", o.no_fixtures, "Random rows only");
  explore->add_flag("--json", o.json, "Machine-readable output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return CmdCheck(o, out);
    if (opt->parsed()) return CmdOpt(o, out);
    if (search->parsed()) return CmdSearch(o, out, err);
    if (transform->parsed()) return CmdTransform(o, out);
    if (bounds->parsed()) return CmdBounds(o, out);
    if (gen->parsed()) return CmdGen(o, out);
    if (explore->parsed()) return CmdExplore(o, out);
  } catch (const InfeasibleAllocation& e) {
    ReportInfeasible(e, o.json, out, err);
    return kExitNegative;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wef
