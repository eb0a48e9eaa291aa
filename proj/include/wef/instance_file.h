#ifndef WEF_INSTANCE_FILE_H_
#define WEF_INSTANCE_FILE_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "wef/fixtures.h"

namespace wef {

// JSON instance document:
//   {
//     "family": "lemma2a",                 optional, informational
//     "weights": ["1", "1", 2, "3/2"],     rational strings or integers
//     "valuations": [["6"], ...],          n rows of m entries
//     "allocation": [0, ...],              optional, owner of each item
//     "payments": ["0", "6", ...],         optional, one per agent
//     "expected": {"P2": "12", ...}        optional
//   }
// Other keys are rejected.
using InstanceDocument = Fixture;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

InstanceDocument ParseInstanceDocument(std::string_view text);
InstanceDocument ReadInstanceFile(const std::string& path);

// Deterministic rendering (fixed key order, two-space indent, rationals as
// strings, trailing newline).
std::string WriteInstanceDocument(const InstanceDocument& document);

}  // namespace wef

#endif  // WEF_INSTANCE_FILE_H_
