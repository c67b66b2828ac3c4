#pragma once

#include "fosc/group_algebra.hpp"
#include "fosc/mode_basis.hpp"
#include "fosc/screen.hpp"

// All transforms act on mode coefficients as c' = M c, level by level.
// Composition reads right to left: in A(B(c)), B is applied first.
//
// Within a level of spin lambda the blocks are
//   rotate(theta)      M = d^lambda(2 theta)
//   gyrate(gamma)      M_{mu,mu'} = e^{-i pi (n_x-n_y)/4} d^lambda_{mu,mu'}(2 gamma) e^{+i pi (n'_x-n'_y)/4}
// and the Fourier-Kravchuk transforms are diagonal phases.

namespace fosc {

/// F_{n_x,n_y} = sum_q F(q) Psi_{n_x,n_y}(q). Throws DimensionError on shape mismatch.
ModeCoefficients analyze(const CartesianBasis& basis, const Image& image);
/// F(q) = sum_n F_n Psi_n(q).
Image synthesize(const CartesianBasis& basis, const ModeCoefficients& coeffs);

ModeCoefficients rotate_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs, double theta);

/// Symmetric fractional Fourier-Kravchuk transform: (n_x, n_y) picks up e^{-i chi (n_x+n_y)}.
ModeCoefficients ks_coeffs(const ModeCoefficients& coeffs, double chi);

/// Antisymmetric fractional Fourier-Kravchuk transform: (n_x, n_y) picks up e^{-i beta (n_x-n_y)}.
ModeCoefficients ka_coeffs(const ModeCoefficients& coeffs, double beta);

/// Antisymmetric transform of the imported multiplets: phase e^{-2 i beta mu}.
/// Equal to ka_coeffs on the lower triangle; elsewhere it differs by a constant
/// phase per level. This is the form that composes with rotations and
/// gyrations into a group representation.
ModeCoefficients ka_imported_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs,
                                    double beta);

/// Gyration from the phase / little-d / phase blocks directly.
ModeCoefficients gyrate_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs, double gamma);

/// Gyration as K_A(pi/4) o R(gamma) o K_A(-pi/4).
ModeCoefficients gyrate_sandwich_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs,
                                        double gamma);

/// Which of the two equivalent Euler factorizations to evaluate:
///   gyration: K_S(chi/2) K_A(psi/2) G(theta/2) K_A(phi/2)
///   rotation: K_S(chi/2) K_A(psi/2 + pi/4) R(theta/2) K_A(phi/2 - pi/4)
/// K_A here is the imported antisymmetric transform.
enum class EulerForm { gyration, rotation };

ModeCoefficients apply_element_coeffs(const CartesianBasis& basis, const ModeCoefficients& coeffs,
                                      const FourierGroupElement& element,
                                      EulerForm form = EulerForm::gyration);

// Image-level wrappers: analyze, transform, synthesize.
Image rotate(const CartesianBasis& basis, const Image& image, double theta);
Image gyrate(const CartesianBasis& basis, const Image& image, double gamma);
/// K_A(beta) after K_S(chi) (they commute).
Image fourier_kravchuk(const CartesianBasis& basis, const Image& image, double chi, double beta);
Image apply_element(const CartesianBasis& basis, const Image& image, const FourierGroupElement& element,
                    EulerForm form = EulerForm::gyration);

}  // namespace fosc
