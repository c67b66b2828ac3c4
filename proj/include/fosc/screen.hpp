#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fosc/error.hpp"
#include "fosc/spin.hpp"

namespace fosc {

/// Rectangular screen of (2 j_x + 1) x (2 j_y + 1) pixels, q_k in {-j_k, ..., j_k}.
/// Either orientation is accepted; nothing requires j_x >= j_y.
struct ScreenShape {
  Spin jx;
  Spin jy;

  static ScreenShape from_twice(int two_jx, int two_jy) {
    return {Spin::from_twice(two_jx), Spin::from_twice(two_jy)};
  }
  /// Screen with the given pixel counts; counts must be positive.
  static ScreenShape from_pixels(int nx, int ny) {
    return {Spin::from_dimension(nx), Spin::from_dimension(ny)};
  }

  int nx() const { return jx.dimension(); }
  int ny() const { return jy.dimension(); }
  std::size_t size() const { return std::size_t(nx()) * std::size_t(ny()); }
  /// Highest total mode 2(j_x + j_y).
  int max_total_mode() const { return jx.twice() + jy.twice(); }

  friend bool operator==(const ScreenShape&, const ScreenShape&) = default;
};

/// Complex array over a screen, row-major with the second index fastest.
/// `Tag` separates pixel arrays from mode-coefficient arrays at compile time.
template <class Tag>
class ComplexGrid {
 public:
  using value_type = std::complex<double>;

  ComplexGrid() = default;
  explicit ComplexGrid(ScreenShape shape) : shape_(shape), values_(shape.size()) {}
  ComplexGrid(ScreenShape shape, std::vector<value_type> values)
      : shape_(shape), values_(std::move(values)) {
    if (values_.size() != shape_.size())
      throw DimensionError("grid payload has " + std::to_string(values_.size()) +
                           " entries, screen needs " + std::to_string(shape_.size()));
  }

  const ScreenShape& shape() const { return shape_; }
  std::size_t size() const { return values_.size(); }

  /// Zero-based indices: pixel (q_x + j_x, q_y + j_y) or mode (n_x, n_y).
  value_type& operator()(int ix, int iy) { return values_[offset(ix, iy)]; }
  const value_type& operator()(int ix, int iy) const { return values_[offset(ix, iy)]; }

  std::span<value_type> values() { return values_; }
  std::span<const value_type> values() const { return values_; }

  double norm() const {
    double acc = 0.0;
    for (const auto& v : values_) acc += std::norm(v);
    return std::sqrt(acc);
  }

 private:
  std::size_t offset(int ix, int iy) const {
    return std::size_t(ix) * std::size_t(shape_.ny()) + std::size_t(iy);
  }

  ScreenShape shape_{};
  std::vector<value_type> values_;
};

struct PixelTag {};
struct ModeTag {};

/// Pixel values F(q_x, q_y).
using Image = ComplexGrid<PixelTag>;
/// Expansion coefficients F_{n_x, n_y} in the Cartesian Kravchuk basis.
using ModeCoefficients = ComplexGrid<ModeTag>;

template <class Tag>
double max_abs_diff(const ComplexGrid<Tag>& a, const ComplexGrid<Tag>& b) {
  if (!(a.shape() == b.shape())) throw DimensionError("comparing grids of different shapes");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  return worst;
}

}  // namespace fosc
