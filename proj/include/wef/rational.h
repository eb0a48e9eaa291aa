#ifndef WEF_RATIONAL_H_
#define WEF_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wef {

// Exact arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

// Accepts "a", "-a", "a/b" with b != 0 (optionally "+a"). Whitespace is not
// allowed. Throws std::invalid_argument on anything else.
Rational ParseRational(std::string_view text);

// Canonical text: "a" for integers, "a/b" otherwise.
std::string ToString(const Rational& value);

// Six significant digits for display. Never fed back into computation.
std::string ToDecimal(const Rational& value);

}  // namespace wef

#endif  // WEF_RATIONAL_H_
