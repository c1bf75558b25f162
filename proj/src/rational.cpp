#include "cpa/rational.hpp"

#include <cctype>

#include "cpa/error.hpp"

namespace cpa {

std::string to_string(const Rational& value) { return value.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::Format, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::Format, "zero denominator in '" + std::string(text) + "'");
  Rational value(negative ? mpz_class(-p) : p, q);
  value.canonicalize();
  return value;
}

}  // namespace cpa
