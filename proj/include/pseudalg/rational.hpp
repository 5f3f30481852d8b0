#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace pseudalg {

// Exact rational scalar. cpp_rational keeps values normalized (lowest terms,
// positive denominator), which is exactly the canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Parses "p" or "p/q" with optional leading sign. Returns nullopt on junk.
inline std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  Integer num = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    num = num * 10 + (s[i] - '0');
    ++i;
  }
  Integer den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    den = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      den = den * 10 + (s[i] - '0');
      ++i;
    }
    if (den == 0) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  Rational q(num, den);
  if (neg) q = -q;
  return q;
}

inline Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned j = 0; j < k; ++j) {
    r *= (n - j);
    r /= (j + 1);
  }
  return Rational(r);
}

}  // namespace pseudalg
