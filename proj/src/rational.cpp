#include "gamecat/rational.hpp"

#include <numeric>

namespace gamecat {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw validation_error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den <
         static_cast<__int128>(b.num) * a.den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      std::size_t used = 0;
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw parse_error("rational: trailing junk");
      return Rational(n);
    }
    std::size_t used = 0;
    std::int64_t n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw parse_error("rational: bad numerator");
    std::string d_text = text.substr(slash + 1);
    std::int64_t d = std::stoll(d_text, &used);
    if (used != d_text.size()) throw parse_error("rational: bad denominator");
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw parse_error("rational: cannot parse '" + text + "'");
  } catch (const std::out_of_range&) {
    throw parse_error("rational: out of range '" + text + "'");
  }
}

}  // namespace gamecat
