#pragma once

#include <compare>
#include <string>

namespace fosc {

/// A half-integer stored as twice its value, so index arithmetic stays exact.
struct HalfInteger {
  int twice = 0;

  static constexpr HalfInteger from_twice(int t) { return HalfInteger{t}; }
  /// Throws DomainError unless v is an exact multiple of 1/2.
  static HalfInteger from_value(double v);

  constexpr double value() const { return 0.5 * twice; }
  constexpr bool is_integer() const { return twice % 2 == 0; }

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return {a.twice + b.twice}; }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return {a.twice - b.twice}; }
  friend constexpr HalfInteger operator-(HalfInteger a) { return {-a.twice}; }
};

/// Non-negative half-integer j labelling an su(2) representation of
/// dimension 2j+1.
class Spin {
 public:
  constexpr Spin() = default;
  /// Throws DomainError for negative input.
  static Spin from_twice(int twice_j);
  static Spin from_value(double j);
  /// Spin whose representation has `n` points; n >= 1.
  static Spin from_dimension(int n);

  constexpr int twice() const { return twice_; }
  constexpr int dimension() const { return twice_ + 1; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr HalfInteger as_half_integer() const { return HalfInteger{twice_}; }

  friend constexpr auto operator<=>(Spin, Spin) = default;

 private:
  constexpr explicit Spin(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// "5", "2.5" or "5/2" -> 5/2.
HalfInteger parse_half_integer(const std::string& text);
std::string to_string(HalfInteger h);
std::string to_string(Spin s);

}  // namespace fosc
