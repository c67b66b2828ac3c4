#pragma once

#include "fosc/matrix.hpp"
#include "fosc/spin.hpp"

namespace fosc {

double log_factorial(int n);
/// log C(n, k); requires 0 <= k <= n.
double log_binomial(int n, int k);

/// Symmetric Kravchuk polynomial K_n(s; 1/2, N) = 2F1(-n, -s; -N; 2), N = two_j.
/// Requires 0 <= n, s <= two_j. K_n(s) == K_s(n).
double kravchuk_polynomial(int n, int s, int two_j);

/// Finite-oscillator wavefunction Psi_n^{(j)}(q), q in {-j, ..., j}, n in {0, ..., 2j}.
///
/// Evaluated with the orthonormal three-term recurrence in n starting from the
/// binomial ground state (log-binomial prefactor); levels above j are obtained
/// by the reflection Psi_{2j-n}(q) = (-1)^{q-j} Psi_n(q), so the recurrence is
/// only ever run through its stable half.
double kravchuk_function(Spin j, int n, HalfInteger q);

/// Full table T(n, j+q) = Psi_n^{(j)}(q), (2j+1) x (2j+1). Rows are orthonormal.
RealMatrix kravchuk_table(Spin j);

/// Real Wigner rotation matrix d^lambda_{mu,mu'}(beta) = <lambda mu| exp(-i beta J_y) |lambda mu'>.
///
/// Storage row/column index a = lambda - mu, i.e. mu runs in descending order.
/// Convention is fixed by d^j_{n-j,q}(pi/2) = Psi_n^{(j)}(q).
class LittleDMatrix {
 public:
  LittleDMatrix(Spin lambda, double beta, RealMatrix entries);

  Spin lambda() const { return lambda_; }
  double beta() const { return beta_; }
  int dimension() const { return lambda_.dimension(); }

  /// Element by projections (mu, mu'); throws DomainError when out of range.
  double at(HalfInteger mu, HalfInteger mu_prime) const;
  /// Storage index of projection mu.
  int index_of(HalfInteger mu) const;

  const RealMatrix& entries() const { return entries_; }

 private:
  Spin lambda_;
  double beta_ = 0.0;
  RealMatrix entries_;
};

/// Half-step spin recursion: d^{j} is assembled from d^{j-1/2} and d^{1/2}
/// through the top-spin Clebsch-Gordan coupling. Every step is a convex-like
/// combination of bounded entries, so no cancellation builds up with lambda.
LittleDMatrix wigner_little_d(Spin lambda, double beta);

}  // namespace fosc
