#include "fosc/fourier_transforms.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "fosc/error.hpp"
#include "fosc/special_functions.hpp"

namespace fosc {

namespace {

using cplx = std::complex<double>;
using namespace std::complex_literals;
constexpr double pi = std::numbers::pi;

void require_shape(const CartesianBasis& basis, const ScreenShape& shape, const char* what) {
  if (!(basis.shape() == shape))
    throw DimensionError(std::string(what) + " shape does not match the basis");
}

// Memoized little-d blocks for one transform call; the mid rhomboid reuses one spin.
class BlockCache {
 public:
  explicit BlockCache(double beta) : beta_(beta) {}
  const LittleDMatrix& get(Spin lambda) {
    auto it = cache_.find(lambda.twice());
    if (it == cache_.end()) it = cache_.emplace(lambda.twice(), wigner_little_d(lambda, beta_)).first;
    return it->second;
  }

 private:
  double beta_;
  std::map<int, LittleDMatrix> cache_;
};

// c'_a = sum_b left_a d_{ab} right_b c_b over the level members (descending mu).
template <class Left, class Right>
ModeCoefficients apply_level_blocks(const CartesianBasis& basis, const ModeCoefficients& coeffs,
                                    double beta, Left&& left, Right&& right) {
  require_shape(basis, coeffs.shape(), "coefficient");
  ModeCoefficients out(coeffs.shape());
  BlockCache cache(beta);
  std::vector<cplx> in;
  for (const LevelSpectrum& level : basis.levels()) {
    const RealMatrix& d = cache.get(level.lambda).entries();
    const std::size_t k = level.members.size();
    in.resize(k);
    for (std::size_t b = 0; b < k; ++b) {
      const ModeIndex& mb = level.members[b].mode;
      in[b] = right(mb) * coeffs(mb.nx, mb.ny);
    }
    for (std::size_t a = 0; a < k; ++a) {
      cplx acc = 0.0;
      for (std::size_t b = 0; b < k; ++b) acc += d(a, b) * in[b];
      const ModeIndex& ma = level.members[a].mode;
      out(ma.nx, ma.ny) = left(ma) * acc;
    }
  }
  return out;
}

template <class PhaseFn>
ModeCoefficients diagonal(const ModeCoefficients& coeffs, PhaseFn&& phase) {
  ModeCoefficients out = coeffs;
  for (int nx = 0; nx < coeffs.shape().nx(); ++nx)
    for (int ny = 0; ny < coeffs.shape().ny(); ++ny) out(nx, ny) *= phase(nx, ny);
  return out;
}

}  // namespace

ModeCoefficients analyze(const CartesianBasis& basis, const Image& image) {
  require_shape(basis, image.shape(), "image");
  const int nx = basis.shape().nx();
  const int ny = basis.shape().ny();
  const RealMatrix& px = basis.phi_x();
  const RealMatrix& py = basis.phi_y();

  // T(n_x, i_y) = sum_{i_x} phi_x(n_x, i_x) F(i_x, i_y), then contract i_y.
  std::vector<cplx> t(std::size_t(nx) * ny);
  for (int n = 0; n < nx; ++n)
    for (int ix = 0; ix < nx; ++ix) {
      const double w = px(n, ix);
      for (int iy = 0; iy < ny; ++iy) t[std::size_t(n) * ny + iy] += w * image(ix, iy);
    }
  ModeCoefficients out(basis.shape());
  for (int n = 0; n < nx; ++n)
    for (int m = 0; m < ny; ++m) {
      cplx acc = 0.0;
      for (int iy = 0; iy < ny; ++iy) acc += py(m, iy) * t[std::size_t(n) * ny + iy];
      out(n, m) = acc;
    }
  return out;
}

Image synthesize(const CartesianBasis& basis, const ModeCoefficients& coeffs) {
  require_shape(basis, coeffs.shape(), "coefficient");
  const int nx = basis.shape().nx();
  const int ny = basis.shape().ny();
  const RealMatrix& px = basis.phi_x();
  const RealMatrix& py = basis.phi_y();

  std::vector<cplx> t(std::size_t(nx) * ny);  // (i_x, n_y)
  for (int ix = 0; ix < nx; ++ix)
    for (int n = 0; n < nx; ++n) {
      const double w = px(n, ix);
      for (int m = 0; m < ny; ++m) t[std::size_t(ix) * ny + m] += w * coeffs(n, m);
    }
  Image out(basis.shape());
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy < ny; ++iy) {
      cplx acc = 0.0;
      for (int m = 0; m < ny; ++m) acc += py(m, iy) * t[std::size_t(ix) * ny + m];
      out(ix, iy) = acc;
    }
  return out;
}

ModeCoefficients rotate_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs, double theta) {
  const auto one = [](const ModeIndex&) { return cplx(1.0); };
  return apply_level_blocks(basis, coeffs, 2.0 * theta, one, one);
}

ModeCoefficients gyrate_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs, double gamma) {
  return apply_level_blocks(
      basis, coeffs, 2.0 * gamma,
      [](const ModeIndex& m) { return std::exp(-0.25i * pi * double(m.difference())); },
      [](const ModeIndex& m) { return std::exp(0.25i * pi * double(m.difference())); });
}

ModeCoefficients gyrate_sandwich_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs,
                                        double gamma) {
  return ka_coeffs(rotate_coeffs(basis, ka_coeffs(coeffs, -0.25 * pi), gamma), 0.25 * pi);
}

ModeCoefficients ks_coeffs(const ModeCoefficients& coeffs, double chi) {
  return diagonal(coeffs, [chi](int nx, int ny) { return std::exp(-1i * chi * double(nx + ny)); });
}

ModeCoefficients ka_coeffs(const ModeCoefficients& coeffs, double beta) {
  return diagonal(coeffs, [beta](int nx, int ny) { return std::exp(-1i * beta * double(nx - ny)); });
}

ModeCoefficients ka_imported_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs,
                                    double beta) {
  require_shape(basis, coeffs.shape(), "coefficient");
  ModeCoefficients out = coeffs;
  for (const LevelSpectrum& level : basis.levels())
    for (const LevelMember& mem : level.members)
      out(mem.mode.nx, mem.mode.ny) *= std::exp(-1i * beta * double(mem.mu.twice));
  return out;
}

ModeCoefficients apply_element_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs,
                                      const FourierGroupElement& e, EulerForm form) {
  ModeCoefficients c;
  if (form == EulerForm::gyration) {
    c = ka_imported_coeffs(basis, coeffs, 0.5 * e.phi);
    c = gyrate_coeffs(basis, c, 0.5 * e.theta);
    c = ka_imported_coeffs(basis, c, 0.5 * e.psi);
  } else {
    c = ka_imported_coeffs(basis, coeffs, 0.5 * e.phi - 0.25 * pi);
    c = rotate_coeffs(basis, c, 0.5 * e.theta);
    c = ka_imported_coeffs(basis, c, 0.5 * e.psi + 0.25 * pi);
  }
  return ks_coeffs(c, 0.5 * e.chi);
}

Image rotate(const CartesianBasis& basis, const Image& image, double theta) {
  return synthesize(basis, rotate_coeffs(basis, analyze(basis, image), theta));
}

Image gyrate(const CartesianBasis& basis, const Image& image, double gamma) {
  return synthesize(basis, gyrate_coeffs(basis, analyze(basis, image), gamma));
}

Image fourier_kravchuk(const CartesianBasis& basis, const Image& image, double chi, double beta) {
  return synthesize(basis, ka_coeffs(ks_coeffs(analyze(basis, image), chi), beta));
}

Image apply_element(const CartesianBasis& basis, const Image& image, const FourierGroupElement& element,
                    EulerForm form) {
  return synthesize(basis, apply_element_coeffs(basis, analyze(basis, image), element, form));
}

}  // namespace fosc
