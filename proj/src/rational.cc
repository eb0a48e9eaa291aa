#include "wef/rational.h"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace wef {
namespace {

bool IsInteger(std::string_view digits) {
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view digits) {
  if (digits.front() == '+') digits.remove_prefix(1);
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!IsInteger(num)) {
    throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
  }
  mpz_class denominator = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!IsInteger(den) || den.front() == '-' || den.front() == '+') {
      throw std::invalid_argument("invalid rational '" + std::string(text) +
                                  "'");
    }
    denominator = ParseInteger(den);
    if (denominator == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                  "'");
    }
  }
  Rational value(ParseInteger(num), denominator);
  value.canonicalize();
  return value;
}

std::string ToString(const Rational& value) { return value.get_str(10); }

std::string ToDecimal(const Rational& value) {
  const mpf_class approx(value, 256);
  const int size = gmp_snprintf(nullptr, 0, "%.6Fg", approx.get_mpf_t());
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  gmp_snprintf(buffer.data(), buffer.size(), "%.6Fg", approx.get_mpf_t());
  return std::string(buffer.data());
}

}  // namespace wef
