#include "fosc/spin.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "fosc/error.hpp"

namespace fosc {

HalfInteger HalfInteger::from_value(double v) {
  const double doubled = 2.0 * v;
  const double rounded = std::round(doubled);
  if (!std::isfinite(v) || std::abs(doubled - rounded) > 1e-9 || std::abs(rounded) > 1e8)
    throw DomainError("not a half-integer: " + std::to_string(v));
  return HalfInteger{static_cast<int>(rounded)};
}

Spin Spin::from_twice(int twice_j) {
  if (twice_j < 0) throw DomainError("spin must be non-negative, got 2j=" + std::to_string(twice_j));
  return Spin(twice_j);
}

Spin Spin::from_value(double j) { return from_twice(HalfInteger::from_value(j).twice); }

Spin Spin::from_dimension(int n) {
  if (n < 1) throw DomainError("dimension must be positive, got " + std::to_string(n));
  return Spin(n - 1);
}

namespace {

bool parse_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

HalfInteger parse_half_integer(const std::string& raw) {
  const auto first = raw.find_first_not_of(" \t");
  const std::string text = first == std::string::npos ? "" : raw.substr(first, raw.find_last_not_of(" \t") - first + 1);
  if (text.empty()) throw ParseError("empty half-integer");
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    int num = 0, den = 0;
    if (!parse_int(std::string_view(text).substr(0, slash), num) ||
        !parse_int(std::string_view(text).substr(slash + 1), den) || (den != 1 && den != 2))
      throw ParseError("expected k/2 or k/1, got '" + text + "'");
    return HalfInteger{den == 1 ? 2 * num : num};
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ParseError("trailing characters in '" + text + "'");
  try {
    return HalfInteger::from_value(v);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

std::string to_string(Spin s) { return to_string(s.as_half_integer()); }

}  // namespace fosc
