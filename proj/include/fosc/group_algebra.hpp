#pragma once

#include <array>
#include <complex>
#include <string>

namespace fosc {

/// Element D(chi; psi, theta, phi) of the Fourier group: central symmetric
/// Fourier angle chi and Euler angles (3-2-3) psi, theta, phi, in radians.
///
/// The group that acts on images is U(1) x SU(2) with chi of period 4 pi, so
/// canonical ranges are chi in [0, 4pi), psi in [0, 4pi), theta in [0, pi],
/// phi in [0, 2pi). Raw angles outside these ranges are accepted everywhere.
struct FourierGroupElement {
  double chi = 0.0;
  double psi = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  static FourierGroupElement identity() { return {}; }
  friend bool operator==(const FourierGroupElement&, const FourierGroupElement&) = default;
};

/// 2x2 complex matrix, row-major: {u00, u01, u10, u11}.
struct UnitaryRep2x2 {
  std::array<std::complex<double>, 4> m{};

  std::complex<double>& operator()(int r, int c) { return m[2 * r + c]; }
  const std::complex<double>& operator()(int r, int c) const { return m[2 * r + c]; }

  static UnitaryRep2x2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  std::complex<double> determinant() const { return m[0] * m[3] - m[1] * m[2]; }
  UnitaryRep2x2 adjoint() const;
  /// max |U U^dagger - I|.
  double unitarity_defect() const;
};

UnitaryRep2x2 operator*(const UnitaryRep2x2& a, const UnitaryRep2x2& b);
double max_abs_diff(const UnitaryRep2x2& a, const UnitaryRep2x2& b);

/// U = e^{-i chi/2} exp(-i psi s3/2) exp(-i theta s2/2) exp(-i phi s3/2), det U = e^{-i chi}.
UnitaryRep2x2 to_matrix(const FourierGroupElement& e);

/// SU(2) factor exp(-i psi s3/2) exp(-i theta s2/2) exp(-i phi s3/2), without the chi phase.
UnitaryRep2x2 su2_part(const FourierGroupElement& e);

/// Euler extraction from a U(2) matrix. A U(2) matrix fixes the element only up
/// to (chi, u) ~ (chi + 2pi, -u); the representative with psi in [0, 2pi) is
/// returned. At theta = 0 or pi all 3-axis rotation goes into psi and phi = 0.
/// Throws ValidationError if |U U^dagger - I| > tolerance.
FourierGroupElement from_matrix(const UnitaryRep2x2& u, double tolerance = 1e-10);

/// Canonical representative of the same image operator.
FourierGroupElement canonicalize(const FourierGroupElement& e);

/// a o b: the element acting as "b first, then a". Composition runs on the
/// (chi mod 4pi, SU(2)) lift, so it never aliases chi by 2pi.
FourierGroupElement compose(const FourierGroupElement& a, const FourierGroupElement& b);
FourierGroupElement inverse(const FourierGroupElement& a);

/// True if both elements denote the same image operator: equal chi mod 4pi and
/// equal SU(2) parts, each to `tolerance`.
bool same_element(const FourierGroupElement& a, const FourierGroupElement& b, double tolerance);

/// {"chi": .., "psi": .., "theta": .., "phi": ..} in radians. Missing keys default to 0.
std::string to_json(const FourierGroupElement& e);
FourierGroupElement element_from_json(const std::string& text);

}  // namespace fosc
