#pragma once

#include <vector>

#include "fosc/matrix.hpp"
#include "fosc/screen.hpp"
#include "fosc/spin.hpp"

namespace fosc {

struct ModeIndex {
  int nx = 0;
  int ny = 0;

  int total() const { return nx + ny; }       // n
  int difference() const { return nx - ny; }  // m
  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

/// The three ranges of total mode n on the rhomboid. With j_min = min(j_x, j_y),
/// j_max = max(j_x, j_y): lower 0 <= n <= 2 j_min, mid 2 j_min < n < 2 j_max,
/// upper 2 j_max <= n. The shared boundary levels belong to the triangles.
enum class Interval { lower, mid, upper };

struct LevelMember {
  ModeIndex mode;
  HalfInteger mu;
};

/// One horizontal row n of the rhomboid: an su(2) multiplet of spin lambda(n).
struct LevelSpectrum {
  int n = 0;
  Spin lambda;
  Interval interval = Interval::lower;
  /// Sorted by descending mu (ascending n_y); mu steps by exactly one.
  std::vector<LevelMember> members;
};

Interval classify_level(const ScreenShape& shape, int n);

/// lambda(n) and the mode <-> mu map of level n. Throws DomainError when n is
/// outside [0, 2(j_x + j_y)].
LevelSpectrum level_spectrum(const ScreenShape& shape, int n);

/// Same level, but with lambda and mu computed by the formulas of `formula`
/// regardless of where n lies. Only meaningful where the formulas overlap
/// (boundary levels); used to check that adjacent formulas agree there.
LevelSpectrum level_spectrum_by_formula(const ScreenShape& shape, int n, Interval formula);

/// Precomputed 1D Kravchuk tables for both axes: phi_x(n_x, q_x + j_x) = Psi_{n_x}^{(j_x)}(q_x).
class CartesianBasis {
 public:
  explicit CartesianBasis(ScreenShape shape);

  const ScreenShape& shape() const { return shape_; }
  const RealMatrix& phi_x() const { return phi_x_; }
  const RealMatrix& phi_y() const { return phi_y_; }
  const std::vector<LevelSpectrum>& levels() const { return levels_; }
  const LevelSpectrum& level(int n) const;

  /// Psi_{n_x,n_y}(q_x, q_y) with zero-based pixel indices.
  double mode_value(ModeIndex idx, int ix, int iy) const {
    return phi_x_(idx.nx, ix) * phi_y_(idx.ny, iy);
  }
  bool contains(ModeIndex idx) const {
    return idx.nx >= 0 && idx.ny >= 0 && idx.nx < shape_.nx() && idx.ny < shape_.ny();
  }

 private:
  ScreenShape shape_;
  RealMatrix phi_x_;
  RealMatrix phi_y_;
  std::vector<LevelSpectrum> levels_;
};

CartesianBasis build_basis(ScreenShape shape);

/// Real Cartesian mode Psi_{n_x,n_y} as an image.
Image cartesian_mode(const CartesianBasis& basis, ModeIndex idx);

/// Laguerre-Kravchuk mode Lambda_{n,m} with m = 2 mu.
///
///   Lambda_{n,m} = e^{-i pi lambda/2} e^{-i pi (n_x-n_y)/4}
///                  sum_{mu'} d^lambda_{mu,mu'}(pi/2) e^{+i pi (n'_x-n'_y)/4} Psi_{n'_x,n'_y}
///
/// The leading level phase e^{-i pi lambda/2} makes Lambda_{n,-m} = conj(Lambda_{n,m})
/// hold exactly and the m = 0 modes real. Throws DomainError when (n, m) is not
/// in the spectrum.
Image lk_mode(const CartesianBasis& basis, int n, int m);

/// Coefficients of lk_mode in the Cartesian basis.
ModeCoefficients lk_mode_coefficients(const CartesianBasis& basis, int n, int m);

}  // namespace fosc
