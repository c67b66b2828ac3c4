#include "fosc/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "fosc/error.hpp"

namespace fosc {

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial of negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw DomainError("log_binomial: k out of range");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

namespace {

void check_mode(int two_j, int n, const char* what) {
  if (n < 0 || n > two_j)
    throw DomainError(std::string(what) + " = " + std::to_string(n) + " outside [0, " +
                      std::to_string(two_j) + "]");
}

// phi_n(s) = (-1)^n Psi_n, n = 0..upto, for fixed s (column of the table).
// Orthonormal recurrence:
//   sqrt((n+1)(N-n)) phi_{n+1} = (N-2s) phi_n - sqrt(n(N-n+1)) phi_{n-1}
template <class Sink>
void recur_column(int two_j, int s, int upto, Sink&& sink) {
  const int big_n = two_j;
  double prev = 0.0;
  double cur = std::exp(0.5 * log_binomial(big_n, s) - 0.5 * big_n * std::numbers::ln2);
  sink(0, cur);
  for (int n = 0; n < upto; ++n) {
    const double next = ((big_n - 2.0 * s) * cur - std::sqrt(double(n) * (big_n - n + 1)) * prev) /
                        std::sqrt(double(n + 1) * (big_n - n));
    prev = cur;
    cur = next;
    sink(n + 1, (n + 1) % 2 == 0 ? cur : -cur);
  }
}

}  // namespace

double kravchuk_function(Spin j, int n, HalfInteger q) {
  const int two_j = j.twice();
  check_mode(two_j, n, "mode n");
  if (std::abs(q.twice) > two_j || (q.twice + two_j) % 2 != 0)
    throw DomainError("position q = " + to_string(q) + " not on the grid of spin " + to_string(j));
  const int s = (two_j + q.twice) / 2;

  // Reflect the upper half of the mode range onto the lower one.
  int target = n;
  double sign = 1.0;
  if (2 * n > two_j) {
    target = two_j - n;
    if ((s + two_j) % 2 != 0) sign = -1.0;
  }
  double value = 0.0;
  recur_column(two_j, s, target, [&](int k, double v) {
    if (k == target) value = v;
  });
  return sign * value;
}

RealMatrix kravchuk_table(Spin j) {
  const int two_j = j.twice();
  const int dim = j.dimension();
  RealMatrix t(dim, dim);
  const int half = two_j / 2;
  for (int s = 0; s < dim; ++s) {
    recur_column(two_j, s, half, [&](int n, double v) { t(n, s) = v; });
    const double sign = (s + two_j) % 2 == 0 ? 1.0 : -1.0;
    for (int n = half + 1; n <= two_j; ++n) t(n, s) = sign * t(two_j - n, s);
  }
  return t;
}

double kravchuk_polynomial(int n, int s, int two_j) {
  if (two_j < 0) throw DomainError("two_j must be non-negative");
  check_mode(two_j, n, "degree n");
  check_mode(two_j, s, "argument s");
  if (n == 0 || s == 0) return 1.0;
  // Invert the Psi prefactor: K_n(s) = (-1)^n 2^j Psi_n(q) / sqrt(C(2j,n) C(2j,s)).
  const Spin j = Spin::from_twice(two_j);
  const double psi = kravchuk_function(j, n, HalfInteger{2 * s - two_j});
  const double log_scale =
      0.5 * two_j * std::numbers::ln2 - 0.5 * (log_binomial(two_j, n) + log_binomial(two_j, s));
  const double k = psi * std::exp(log_scale);
  return n % 2 == 0 ? k : -k;
}

LittleDMatrix::LittleDMatrix(Spin lambda, double beta, RealMatrix entries)
    : lambda_(lambda), beta_(beta), entries_(std::move(entries)) {
  if (entries_.rows() != static_cast<std::size_t>(lambda.dimension()) ||
      entries_.cols() != static_cast<std::size_t>(lambda.dimension()))
    throw DimensionError("little-d entries do not match spin dimension");
}

int LittleDMatrix::index_of(HalfInteger mu) const {
  const int two_l = lambda_.twice();
  if (std::abs(mu.twice) > two_l || (two_l - mu.twice) % 2 != 0)
    throw DomainError("projection " + to_string(mu) + " not in spin " + to_string(lambda_));
  return (two_l - mu.twice) / 2;
}

double LittleDMatrix::at(HalfInteger mu, HalfInteger mu_prime) const {
  return entries_(index_of(mu), index_of(mu_prime));
}

LittleDMatrix wigner_little_d(Spin lambda, double beta) {
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);

  RealMatrix prev(1, 1, 1.0);
  for (int t = 1; t <= lambda.twice(); ++t) {
    // Index a = j - m' (row), b = j - m (column); j + m' = t - a, j - m' = a.
    RealMatrix next(t + 1, t + 1);
    for (int a = 0; a <= t; ++a) {
      for (int b = 0; b <= t; ++b) {
        double v = 0.0;
        if (a < t && b < t) v += std::sqrt(double(t - a) * (t - b)) * c * prev(a, b);
        if (a < t && b > 0) v -= std::sqrt(double(t - a) * b) * s * prev(a, b - 1);
        if (a > 0 && b < t) v += std::sqrt(double(a) * (t - b)) * s * prev(a - 1, b);
        if (a > 0 && b > 0) v += std::sqrt(double(a) * b) * c * prev(a - 1, b - 1);
        next(a, b) = v / t;
      }
    }
    prev = std::move(next);
  }
  return LittleDMatrix(lambda, beta, std::move(prev));
}

}  // namespace fosc
