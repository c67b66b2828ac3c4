#include <cmath>
#include <random>

#include "doctest.h"
#include "fosc/error.hpp"
#include "fosc/fourier_transforms.hpp"
#include "fosc/mode_basis.hpp"
#include "fosc/verify.hpp"
#include "oracles.hpp"

using namespace fosc;

TEST_CASE("level spin on the (11,7) screen") {
  const ScreenShape s = ScreenShape::from_twice(22, 14);
  CHECK(level_spectrum(s, 4).lambda.twice() == 4);
  CHECK(level_spectrum(s, 4).members.size() == 5);
  CHECK(level_spectrum(s, 18).lambda.twice() == 14);
  CHECK(level_spectrum(s, 18).interval == Interval::mid);
  CHECK(level_spectrum(s, 32).lambda.twice() == 4);
  CHECK(level_spectrum(s, 32).interval == Interval::upper);
  CHECK_THROWS_AS(level_spectrum(s, 37), DomainError);
  CHECK_THROWS_AS(level_spectrum(s, -1), DomainError);
}

TEST_CASE("levels agree with the three-interval oracle") {
  for (auto [tx, ty] : {std::pair{10, 6}, {22, 14}, {7, 3}, {5, 5}, {4, 0}}) {
    const oracle::Screen o{tx, ty};
    const ScreenShape s = ScreenShape::from_twice(tx, ty);
    for (int n = 0; n <= tx + ty; ++n)
      for (const auto& m : level_spectrum(s, n).members) {
        int tl = 0, tm = 0;
        oracle::level_of(o, m.mode.nx, m.mode.ny, tl, tm);
        CHECK(tl == level_spectrum(s, n).lambda.twice());
        CHECK(tm == m.mu.twice);
      }
  }
}

TEST_CASE("mode count, mu ladder and boundary formulas on random shapes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> spin(0, 40);
  for (int trial = 0; trial < 50; ++trial) {
    const int tx = spin(rng), ty = spin(rng);
    const ScreenShape s = ScreenShape::from_twice(tx, ty);
    long total = 0;
    for (int n = 0; n <= tx + ty; ++n) {
      const LevelSpectrum level = level_spectrum(s, n);
      total += level.lambda.dimension();
      for (std::size_t i = 0; i < level.members.size(); ++i)
        CHECK(level.members[i].mu.twice == level.lambda.twice() - 2 * int(i));
    }
    CHECK(total == long(s.size()));
    for (int n : {tx, ty}) {
      const Interval here = classify_level(s, n);
      for (Interval other : {Interval::lower, Interval::mid, Interval::upper}) {
        // Only formulas of intervals whose closure contains n are compared.
        const int lo = std::min(tx, ty), hi = std::max(tx, ty);
        const bool adjacent = (other == Interval::lower && n == lo) || (other == Interval::upper && n == hi) ||
                              (other == Interval::mid && lo < hi && (n == lo || n == hi));
        if (!adjacent) continue;
        const auto a = level_spectrum_by_formula(s, n, here), b = level_spectrum_by_formula(s, n, other);
        CHECK(a.lambda.twice() == b.lambda.twice());
        for (std::size_t i = 0; i < a.members.size(); ++i) CHECK(a.members[i].mu.twice == b.members[i].mu.twice);
      }
    }
  }
}

TEST_CASE("transposed screens give mirrored levels") {
  const ScreenShape a = ScreenShape::from_twice(10, 6), b = ScreenShape::from_twice(6, 10);
  for (int n = 0; n <= 16; ++n) {
    const auto la = level_spectrum(a, n), lb = level_spectrum(b, n);
    CHECK(la.lambda == lb.lambda);
    // (nx, ny) on one screen is (ny, nx) on the other, with mu negated.
    for (const auto& m : la.members) {
      bool found = false;
      for (const auto& k : lb.members)
        if (k.mode.nx == m.mode.ny && k.mode.ny == m.mode.nx) {
          CHECK(k.mu.twice == -m.mu.twice);
          found = true;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("Cartesian basis tables and modes") {
  const CartesianBasis b11(ScreenShape::from_twice(2, 2));
  CHECK(b11.phi_x()(0, 0) == doctest::Approx(0.5));
  CHECK(b11.phi_x()(0, 1) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(b11.phi_x()(0, 2) == doctest::Approx(0.5));

  const CartesianBasis basis(ScreenShape::from_twice(10, 6));
  CHECK(basis.phi_x().rows() == 11);
  CHECK(basis.phi_y().rows() == 7);
  CHECK(cartesian_modes(basis).size() == 77);

  const Image ground = cartesian_mode(basis, {0, 0});
  for (const auto& v : ground.values()) CHECK(v.real() > 0);
  CHECK_THROWS_AS(cartesian_mode(basis, {11, 0}), DomainError);

  const oracle::Screen o{10, 6};
  double worst = 0.0;
  for (int nx = 0; nx < 11; ++nx)
    for (int ny = 0; ny < 7; ++ny) {
      const Image m = cartesian_mode(basis, {nx, ny});
      for (int ix = 0; ix < 11; ++ix)
        for (int iy = 0; iy < 7; ++iy) worst = std::max(worst, std::abs(m(ix, iy).real() - o.mode(nx, ny, ix, iy)));
    }
  CHECK(worst < 1e-13);
}

TEST_CASE("checkerboard relation between opposite corners of the rhomboid") {
  for (auto [tx, ty] : {std::pair{10, 6}, {22, 14}, {5, 3}}) {
    const CartesianBasis basis(ScreenShape::from_twice(tx, ty));
    double worst = 0.0;
    for (int nx = 0; nx <= tx; ++nx)
      for (int ny = 0; ny <= ty; ++ny)
        for (int ix = 0; ix <= tx; ++ix)
          for (int iy = 0; iy <= ty; ++iy) {
            const double sign = ((ix - tx) + (iy - ty)) % 2 ? -1.0 : 1.0;
            worst = std::max(worst, std::abs(basis.mode_value({tx - nx, ty - ny}, ix, iy) -
                                             sign * basis.mode_value({nx, ny}, ix, iy)));
          }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("Cartesian and LK bases are orthonormal and complete") {
  for (auto [tx, ty] : {std::pair{10, 6}, {22, 14}, {6, 10}, {5, 3}}) {
    const CartesianBasis basis(ScreenShape::from_twice(tx, ty));
    const auto psi = cartesian_modes(basis);
    CHECK(gram_deviation(psi) < 1e-10);
    CHECK(completeness_deviation(psi) < 1e-10);
    const auto lk = lk_modes(basis);
    CHECK(lk.size() == basis.shape().size());
    CHECK(gram_deviation(lk) < 1e-10);
    CHECK(completeness_deviation(lk) < 1e-10);
  }
}

TEST_CASE("LK modes: ground state, conjugate pairs and real m = 0 modes") {
  const CartesianBasis basis(ScreenShape::from_twice(10, 6));
  CHECK(max_abs_diff(lk_mode(basis, 0, 0), cartesian_mode(basis, {0, 0})) < 1e-15);
  for (const auto& level : basis.levels())
    for (const auto& mem : level.members) {
      const int m = mem.mu.twice;
      const Image plus = lk_mode(basis, level.n, m), minus = lk_mode(basis, level.n, -m);
      double worst = 0.0;
      for (std::size_t i = 0; i < plus.size(); ++i)
        worst = std::max(worst, std::abs(minus.values()[i] - std::conj(plus.values()[i])));
      CHECK(worst < 1e-12);
      if (m == 0)
        for (const auto& v : plus.values()) CHECK(std::abs(v.imag()) < 1e-12);
    }
  CHECK_THROWS_AS(lk_mode(basis, 4, 5), DomainError);  // wrong parity
  CHECK_THROWS_AS(lk_mode(basis, 4, 6), DomainError);  // |m| > 2 lambda
  CHECK_THROWS_AS(lk_mode(basis, 17, 0), DomainError);
}

TEST_CASE("LK modes on a screen with half-integer spin") {
  const CartesianBasis basis(ScreenShape::from_twice(5, 3));
  const auto lk = lk_modes(basis);
  CHECK(lk.size() == 24);
  CHECK(gram_deviation(lk) < 1e-12);
}
