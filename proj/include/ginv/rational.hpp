#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ginv {

// Exact arbitrary-precision rational arithmetic.  cpp_rational keeps values
// in lowest terms with a positive denominator, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Renders "p" when the value is integral and "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
  return q.str();
}

// Accepts "p" or "p/q" with optional leading '-'; q must be nonzero.
inline std::optional<Rational> rational_from_string(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      if (!valid_int(s)) return std::nullopt;
      return Rational(Integer(std::string(s)));
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) return std::nullopt;
    Integer d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(Integer(std::string(num)), d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ginv
