#include "wef/instance_file.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace wef {
namespace {

using Json = nlohmann::ordered_json;

Rational RationalAt(const Json& node, const std::string& path) {
  if (node.is_string()) {
    try {
      return ParseRational(node.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (node.is_number_integer()) {
    return ParseRational(node.dump());
  }
  throw ParseError(path + ": expected a rational string or an integer");
}

const Json& ArrayAt(const Json& node, const std::string& path) {
  if (!node.is_array()) throw ParseError(path + ": expected an array");
  return node;
}

std::vector<Rational> RationalList(const Json& node, const std::string& path) {
  std::vector<Rational> out;
  const Json& array = ArrayAt(node, path);
  for (std::size_t k = 0; k < array.size(); ++k) {
    out.push_back(RationalAt(array[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

Json RationalJson(const Rational& r) { return ToString(r); }

Json ListJson(const std::vector<Rational>& values) {
  Json array = Json::array();
  for (const auto& v : values) array.push_back(RationalJson(v));
  return array;
}

}  // namespace

InstanceDocument ParseInstanceDocument(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!root.is_object()) throw ParseError("document must be a JSON object");
  static const std::set<std::string> kKnown = {
      "family", "weights", "valuations", "allocation", "payments", "expected"};
  for (const auto& [key, value] : root.items()) {
    if (!kKnown.contains(key)) throw ParseError("unknown key '" + key + "'");
  }
  if (!root.contains("weights")) throw ParseError("missing key 'weights'");
  if (!root.contains("valuations")) throw ParseError("missing key 'valuations'");

  std::string family;
  if (root.contains("family")) {
    if (!root["family"].is_string()) throw ParseError("family: expected a string");
    family = root["family"].get<std::string>();
  }
  std::vector<Rational> weights = RationalList(root["weights"], "weights");
  std::vector<std::vector<Rational>> valuations;
  const Json& rows = ArrayAt(root["valuations"], "valuations");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    valuations.push_back(
        RationalList(rows[i], "valuations[" + std::to_string(i) + "]"));
  }
  std::optional<Instance> instance;
  try {
    instance.emplace(std::move(weights), std::move(valuations));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
  InstanceDocument doc{std::move(family), std::move(*instance), std::nullopt,
                       std::nullopt, {}};

  if (root.contains("allocation")) {
    const Json& array = ArrayAt(root["allocation"], "allocation");
    std::vector<AgentIndex> owner;
    for (std::size_t o = 0; o < array.size(); ++o) {
      if (!array[o].is_number_unsigned()) {
        throw ParseError("allocation[" + std::to_string(o) +
                         "]: expected a nonnegative integer");
      }
      owner.push_back(array[o].get<AgentIndex>());
    }
    Allocation allocation(std::move(owner));
    try {
      allocation.Validate(doc.instance);
    } catch (const UsageError& e) {
      throw ParseError(std::string("allocation: ") + e.what());
    }
    doc.allocation = std::move(allocation);
  }
  if (root.contains("payments")) {
    PaymentVector payments(RationalList(root["payments"], "payments"));
    if (payments.size() != doc.instance.num_agents()) {
      throw ParseError("payments: expected " +
                       std::to_string(doc.instance.num_agents()) +
                       " entries, got " + std::to_string(payments.size()));
    }
    doc.payments = std::move(payments);
  }
  if (root.contains("expected")) {
    if (!root["expected"].is_object()) {
      throw ParseError("expected: expected an object");
    }
    for (const auto& [key, value] : root["expected"].items()) {
      doc.expected[key] = RationalAt(value, "expected." + key);
    }
  }
  return doc;
}

InstanceDocument ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceDocument(buffer.str());
}

std::string WriteInstanceDocument(const InstanceDocument& doc) {
  Json root = Json::object();
  if (!doc.family.empty()) root["family"] = doc.family;
  root["weights"] = ListJson(doc.instance.weights());
  Json rows = Json::array();
  for (const auto& row : doc.instance.valuations()) rows.push_back(ListJson(row));
  root["valuations"] = std::move(rows);
  if (doc.allocation) root["allocation"] = doc.allocation->owner();
  if (doc.payments) root["payments"] = ListJson(doc.payments->values);
  if (!doc.expected.empty()) {
    Json expected = Json::object();
    for (const auto& [key, value] : doc.expected) expected[key] = RationalJson(value);
    root["expected"] = std::move(expected);
  }
  return root.dump(2) + "\n";
}

}  // namespace wef
