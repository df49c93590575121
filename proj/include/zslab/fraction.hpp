#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "zslab/errors.hpp"

namespace zslab {

// Exact nonnegative rational. Cross numbers have numerators bounded by the
// sequence length and denominators by the group exponent, so 64-bit
// cross-multiplication never overflows at the scales this library handles.
struct Fraction {
  long long num = 0;
  long long den = 1;

  constexpr Fraction() = default;
  constexpr Fraction(long long n) : num(n), den(1) {}
  constexpr Fraction(long long n, long long d) : num(n), den(d) { normalize(); }

  constexpr void normalize() {
    if (den == 0) { num = 0; den = 1; return; }  // never produced by public ops
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend constexpr Fraction operator+(Fraction a, Fraction b) {
    return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend constexpr Fraction operator-(Fraction a, Fraction b) {
    return Fraction(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  Fraction& operator+=(Fraction o) { *this = *this + o; return *this; }

  friend constexpr bool operator==(Fraction a, Fraction b) {
    return a.num == b.num && a.den == b.den;
  }
  friend constexpr bool operator!=(Fraction a, Fraction b) { return !(a == b); }
  friend constexpr bool operator<(Fraction a, Fraction b) {
    return a.num * b.den < b.num * a.den;
  }
  friend constexpr bool operator<=(Fraction a, Fraction b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend constexpr bool operator>(Fraction a, Fraction b) { return b < a; }
  friend constexpr bool operator>=(Fraction a, Fraction b) { return b <= a; }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p/q" or a bare integer "p"; the whole string must be consumed.
  static Fraction parse(const std::string& s) {
    try {
      auto to_ll = [&](const std::string& part) {
        std::size_t used = 0;
        long long v = std::stoll(part, &used);
        if (used != part.size()) fail(errc::parse_error, "bad fraction literal: " + s);
        return v;
      };
      auto slash = s.find('/');
      if (slash == std::string::npos) return Fraction(to_ll(s));
      long long n = to_ll(s.substr(0, slash));
      long long d = to_ll(s.substr(slash + 1));
      if (d <= 0) fail(errc::parse_error, "fraction denominator must be positive: " + s);
      return Fraction(n, d);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad fraction literal: " + s);
    }
  }
};

}  // namespace zslab
