#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fosc/mode_basis.hpp"

namespace fosc {

struct VerifyOptions {
  std::vector<ScreenShape> shapes = {ScreenShape::from_twice(10, 6), ScreenShape::from_twice(22, 14),
                                     ScreenShape::from_twice(40, 24)};
  double tol_unitary = 1e-10;      // norm preservation, orthonormality, cross-checks
  double tol_composition = 1e-9;   // group laws and round trips
  int random_images = 4;           // per shape and per operation
  int random_pairs = 10;           // element pairs for the homomorphism
  std::uint64_t seed = 20240601;
};

struct CheckResult {
  std::string name;
  std::string shape;  // empty for shape-independent checks
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Reported only: never fails the run.
  bool informational = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  int failures() const;
};

using CheckCallback = std::function<void(const CheckResult&)>;

/// Runs the invariant suite: special functions, level bookkeeping, basis
/// orthonormality and completeness, unitarity and group laws of every
/// transform, the 2x2 representation, and file round trips.
VerifyReport run_verification(const VerifyOptions& options, const CheckCallback& on_check = {});

// Building blocks shared with the test suites.

/// max |<a_i, a_k> - delta_ik|.
double gram_deviation(const std::vector<Image>& modes);
/// max |sum_i a_i(q) conj(a_i(q')) - delta_qq'|.
double completeness_deviation(const std::vector<Image>& modes);

std::vector<Image> cartesian_modes(const CartesianBasis& basis);
std::vector<Image> lk_modes(const CartesianBasis& basis);

/// The operator rotate(pi) reduces to: (-1)^{2 lambda(n)} on every level.
ModeCoefficients level_sign_map(const CartesianBasis& basis, const ModeCoefficients& coeffs);
/// F(q_x, q_y) -> F(-q_x, -q_y).
Image pixel_inversion(const Image& image);

}  // namespace fosc
