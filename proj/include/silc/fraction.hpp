#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "silc/errors.hpp"

namespace silc {

// Exact rational with small operands.  Breakpoints of LS paths live in [0,1]
// with denominators bounded by pairing values, so int64 never overflows.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n) : num(n), den(1) {}
  Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw internal_error("Frac: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
  friend Frac operator/(Frac a, Frac b) {
    if (b.num == 0) throw internal_error("Frac: division by zero");
    return Frac(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
  friend bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Frac& a, const Frac& b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
  friend bool operator>=(const Frac& a, const Frac& b) { return b <= a; }

  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Parses "p/q" or "p".  Throws input_error on malformed text.
inline Frac parse_frac(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Frac(std::stoll(s));
    std::int64_t p = std::stoll(s.substr(0, slash));
    std::int64_t q = std::stoll(s.substr(slash + 1));
    if (q == 0) throw input_error("rational with zero denominator: " + s);
    return Frac(p, q);
  } catch (const std::logic_error&) {
    throw input_error("malformed rational: " + s);
  }
}

}  // namespace silc
