// Half-integers stored exactly as twice their value, so 5/2 is {5} and 3 is
// {6}.  Gamma-function arguments throughout the library are half-integers.
#pragma once

#include <compare>
#include <string>

#include "error.hpp"
#include "rational.hpp"

namespace selberg {

struct HalfInt {
  long twice_value = 0;

  HalfInt() = default;
  explicit HalfInt(long integer) : twice_value(2 * integer) {}
  static HalfInt from_twice(long t) {
    HalfInt h;
    h.twice_value = t;
    return h;
  }

  bool is_integer() const { return twice_value % 2 == 0; }
  // Pre: is_integer().
  long integer_value() const {
    check_internal(is_integer(), "integer_value on proper half-integer");
    return twice_value / 2;
  }
  bool is_positive() const { return twice_value > 0; }

  HalfInt operator+(const HalfInt& o) const { return from_twice(twice_value + o.twice_value); }
  HalfInt operator-(const HalfInt& o) const { return from_twice(twice_value - o.twice_value); }
  HalfInt operator+(long k) const { return from_twice(twice_value + 2 * k); }
  HalfInt operator-(long k) const { return from_twice(twice_value - 2 * k); }
  auto operator<=>(const HalfInt&) const = default;

  Rational to_rational() const { return make_rational(twice_value, 2); }

  // "5/2" or "3".
  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_value / 2);
    return std::to_string(twice_value) + "/2";
  }
  // "\tfrac{5}{2}" or "3".
  std::string to_latex() const {
    if (is_integer()) return std::to_string(twice_value / 2);
    long t = twice_value;
    std::string sign = t < 0 ? "-" : "";
    if (t < 0) t = -t;
    return sign + "\\tfrac{" + std::to_string(t) + "}{2}";
  }
};

}  // namespace selberg
