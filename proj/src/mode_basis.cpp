#include "fosc/mode_basis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "fosc/error.hpp"
#include "fosc/special_functions.hpp"

namespace fosc {

Interval classify_level(const ScreenShape& shape, int n) {
  if (n < 0 || n > shape.max_total_mode())
    throw DomainError("total mode " + std::to_string(n) + " outside [0, " +
                      std::to_string(shape.max_total_mode()) + "]");
  const int two_min = std::min(shape.jx.twice(), shape.jy.twice());
  const int two_max = std::max(shape.jx.twice(), shape.jy.twice());
  if (n <= two_min) return Interval::lower;
  if (n >= two_max) return Interval::upper;
  return Interval::mid;
}

LevelSpectrum level_spectrum_by_formula(const ScreenShape& shape, int n, Interval formula) {
  if (n < 0 || n > shape.max_total_mode())
    throw DomainError("total mode " + std::to_string(n) + " outside the rhomboid");
  const int tjx = shape.jx.twice();
  const int tjy = shape.jy.twice();

  int two_lambda = 0;
  switch (formula) {
    case Interval::lower: two_lambda = n; break;
    case Interval::mid: two_lambda = std::min(tjx, tjy); break;
    case Interval::upper: two_lambda = tjx + tjy - n; break;
  }
  if (two_lambda < 0) throw DomainError("formula gives negative spin at level " + std::to_string(n));

  LevelSpectrum level;
  level.n = n;
  level.lambda = Spin::from_twice(two_lambda);
  level.interval = formula;
  for (int ny = std::max(0, n - tjx); ny <= std::min(tjy, n); ++ny) {
    const int nx = n - ny;
    int two_mu = 0;
    switch (formula) {
      case Interval::lower: two_mu = nx - ny; break;
      case Interval::mid: two_mu = tjx >= tjy ? tjy - 2 * ny : 2 * nx - tjx; break;
      case Interval::upper: two_mu = nx - ny - tjx + tjy; break;
    }
    level.members.push_back({ModeIndex{nx, ny}, HalfInteger{two_mu}});
  }
  return level;
}

LevelSpectrum level_spectrum(const ScreenShape& shape, int n) {
  LevelSpectrum level = level_spectrum_by_formula(shape, n, classify_level(shape, n));
  if (static_cast<int>(level.members.size()) != level.lambda.dimension())
    throw Error("internal: level " + std::to_string(n) + " has inconsistent multiplet size");
  return level;
}

CartesianBasis::CartesianBasis(ScreenShape shape)
    : shape_(shape), phi_x_(kravchuk_table(shape.jx)), phi_y_(kravchuk_table(shape.jy)) {
  levels_.reserve(shape.max_total_mode() + 1);
  for (int n = 0; n <= shape.max_total_mode(); ++n) levels_.push_back(level_spectrum(shape, n));
}

const LevelSpectrum& CartesianBasis::level(int n) const {
  if (n < 0 || n >= static_cast<int>(levels_.size()))
    throw DomainError("total mode " + std::to_string(n) + " outside the rhomboid");
  return levels_[n];
}

CartesianBasis build_basis(ScreenShape shape) { return CartesianBasis(shape); }

Image cartesian_mode(const CartesianBasis& basis, ModeIndex idx) {
  if (!basis.contains(idx))
    throw DomainError("mode (" + std::to_string(idx.nx) + "," + std::to_string(idx.ny) +
                      ") outside the screen's mode range");
  Image img(basis.shape());
  for (int ix = 0; ix < basis.shape().nx(); ++ix)
    for (int iy = 0; iy < basis.shape().ny(); ++iy) img(ix, iy) = basis.mode_value(idx, ix, iy);
  return img;
}

ModeCoefficients lk_mode_coefficients(const CartesianBasis& basis, int n, int m) {
  const LevelSpectrum& level = basis.level(n);
  const auto target = std::find_if(level.members.begin(), level.members.end(),
                                   [m](const LevelMember& mem) { return mem.mu.twice == m; });
  if (target == level.members.end())
    throw DomainError("m = " + std::to_string(m) + " is not a projection 2mu of level n = " +
                      std::to_string(n) + " (lambda = " + to_string(level.lambda) + ")");

  using namespace std::complex_literals;
  constexpr double pi = std::numbers::pi;
  const LittleDMatrix d = wigner_little_d(level.lambda, 0.5 * pi);
  const std::complex<double> lead =
      std::exp(-1i * (0.5 * pi * level.lambda.value() + 0.25 * pi * target->mode.difference()));

  ModeCoefficients coeffs(basis.shape());
  for (const LevelMember& mem : level.members)
    coeffs(mem.mode.nx, mem.mode.ny) =
        lead * d.at(target->mu, mem.mu) * std::exp(0.25i * pi * double(mem.mode.difference()));
  return coeffs;
}

Image lk_mode(const CartesianBasis& basis, int n, int m) {
  const ModeCoefficients coeffs = lk_mode_coefficients(basis, n, m);
  Image img(basis.shape());
  for (const LevelMember& mem : basis.level(n).members) {
    const auto c = coeffs(mem.mode.nx, mem.mode.ny);
    for (int ix = 0; ix < basis.shape().nx(); ++ix)
      for (int iy = 0; iy < basis.shape().ny(); ++iy) img(ix, iy) += c * basis.mode_value(mem.mode, ix, iy);
  }
  return img;
}

}  // namespace fosc
