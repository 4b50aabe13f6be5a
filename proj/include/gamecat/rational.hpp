#pragma once

#include <cstdint>
#include <string>

#include "gamecat/error.hpp"

namespace gamecat {

// Exact rational with 64-bit numerator/denominator, always normalized
// (gcd 1, positive denominator). Payoff comparisons must be exact, so no
// floating point anywhere near preferences.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  bool operator==(const Rational&) const = default;
  std::string str() const;  // "3" or "3/4"
};

bool operator<(const Rational& a, const Rational& b);
inline bool operator<=(const Rational& a, const Rational& b) {
  return a == b || a < b;
}

// Accepts "3", "-3", "3/4".
Rational parse_rational(const std::string& text);

}  // namespace gamecat
