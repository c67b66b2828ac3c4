// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "fosc/figures.hpp"
#include "fosc/fourier_transforms.hpp"
#include "fosc/image_io.hpp"
#include "fosc/special_functions.hpp"
#include "fosc/verify.hpp"

using namespace fosc;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failed = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string timing = " [" + std::to_string(secs).substr(0, 5) + " s";
  if (budget_s > 0) {
    timing += " of " + std::to_string(int(budget_s)) + " s";
    if (secs > budget_s) {
      o.passed = false;
      timing += ", over budget";
    }
  }
  timing += "]";
  if (!o.passed) ++failed;
  std::printf("criterion %d %s: %s; %s%s\n", id, o.passed ? "PASS" : "FAIL", title, o.detail.c_str(), timing.c_str());
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string cmp(const char* what, double value, double tol) {
  return std::string(what) + " " + sci(value) + (value < tol ? " < " : " >= ") + sci(tol);
}

Image random_image(const ScreenShape& s, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Image img(s);
  for (auto& v : img.values()) v = {g(rng), g(rng)};
  return img;
}

FourierGroupElement random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2 * pi, 2 * pi);
  return {u(rng), u(rng), u(rng), u(rng)};
}

const ScreenShape shape53 = ScreenShape::from_twice(10, 6);
const ScreenShape shape117 = ScreenShape::from_twice(22, 14);
const ScreenShape shape2012 = ScreenShape::from_twice(40, 24);

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);

  criterion(1, "Kravchuk functions equal little-d(pi/2) for 2j <= 40", 10, [] {
    double worst = 0.0;
    for (int two_j = 0; two_j <= 40; ++two_j) {
      const Spin j = Spin::from_twice(two_j);
      const LittleDMatrix d = wigner_little_d(j, pi / 2);
      for (int n = 0; n <= two_j; ++n)
        for (int s = 0; s <= two_j; ++s) {
          const HalfInteger q{2 * s - two_j};
          worst = std::max(worst, std::abs(d.at(HalfInteger{2 * n - two_j}, q) - kravchuk_function(j, n, q)));
        }
    }
    return Outcome{worst < 1e-10, cmp("max |d - Psi|", worst, 1e-10)};
  });

  criterion(2, "Cartesian and LK bases orthonormal and complete on (5,3), (11,7), (20,12)", 30, [] {
    double worst = 0.0;
    std::string detail;
    for (const auto& s : {shape53, shape117, shape2012}) {
      const CartesianBasis basis(s);
      const auto psi = cartesian_modes(basis);
      const auto lk = lk_modes(basis);
      const double d = std::max({gram_deviation(psi), completeness_deviation(psi), gram_deviation(lk),
                                 completeness_deviation(lk)});
      worst = std::max(worst, d);
    }
    return Outcome{worst < 1e-10, cmp("max Gram/completeness deviation", worst, 1e-10)};
  });

  criterion(3, "R, K_S, K_A, G, D preserve the norm of 100 random images per screen", 0, [&] {
    std::uniform_real_distribution<double> a(-pi, pi);
    double worst = 0.0;
    int ops = 0;
    for (const auto& s : {shape53, shape117, shape2012}) {
      const CartesianBasis basis(s);
      for (int i = 0; i < 100; ++i) {
        const Image f = random_image(s, rng);
        const double n0 = f.norm();
        for (const Image& g : {rotate(basis, f, a(rng)), fourier_kravchuk(basis, f, a(rng), 0.0),
                               fourier_kravchuk(basis, f, 0.0, a(rng)), gyrate(basis, f, a(rng)),
                               apply_element(basis, f, random_element(rng))}) {
          worst = std::max(worst, std::abs(g.norm() / n0 - 1.0));
          ++ops;
        }
      }
    }
    return Outcome{worst < 1e-10, cmp("max relative norm change", worst, 1e-10) + " over " + std::to_string(ops) + " transforms"};
  });

  criterion(4, "41x25 glyph: six pi/6 rotations = one pi rotation = pixel inversion", 60, [] {
    const CartesianBasis basis(shape2012);
    const Image glyph = f_glyph();
    ModeCoefficients c = analyze(basis, glyph);
    for (int i = 0; i < 6; ++i) c = rotate_coeffs(basis, c, pi / 6);
    const Image six = synthesize(basis, c);
    const Image once = rotate(basis, glyph, pi);
    const double steps = max_abs_diff(six, once);
    const double inversion = max_abs_diff(once, pixel_inversion(glyph));
    const double sign_map = max_abs_diff(once, synthesize(basis, level_sign_map(basis, analyze(basis, glyph))));
    return Outcome{steps < 1e-8 && inversion < 1e-8,
                   cmp("six-step vs one-step", steps, 1e-8) + "; " + cmp("one-step vs F(-q)", inversion, 1e-8) +
                       " (rotation by pi equals the per-level sign (-1)^(2 lambda) to " + sci(sign_map) + ")"};
  });

  criterion(5, "direct gyration = K_A(pi/4) R K_A(-pi/4) on (11,7) at gamma = pi/16 .. pi/4", 0, [&] {
    const CartesianBasis basis(shape117);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const ModeCoefficients c = analyze(basis, random_image(shape117, rng));
      for (double g : {pi / 16, pi / 8, 3 * pi / 16, pi / 4})
        worst = std::max(worst, max_abs_diff(gyrate_coeffs(basis, c, g), gyrate_sandwich_coeffs(basis, c, g)));
    }
    return Outcome{worst < 1e-10, cmp("max coefficient difference", worst, 1e-10)};
  });

  criterion(6, "Lambda(n,-m) = conj Lambda(n,m) for every mode of (5,3)", 0, [] {
    const CartesianBasis basis(shape53);
    double worst = 0.0;
    int pairs = 0;
    for (const auto& level : basis.levels())
      for (const auto& mem : level.members) {
        const int m = mem.mu.twice;
        const Image a = lk_mode(basis, level.n, m), b = lk_mode(basis, level.n, -m);
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(b.values()[i] - std::conj(a.values()[i])));
        ++pairs;
      }
    return Outcome{worst < 1e-12, cmp("max entrywise deviation", worst, 1e-12) + " over " + std::to_string(pairs) + " modes"};
  });

  criterion(7, "level bookkeeping on 50 random screens with 2j <= 40", 0, [&] {
    std::uniform_int_distribution<int> spin(0, 40);
    int bad_count = 0, bad_boundary = 0;
    for (int t = 0; t < 50; ++t) {
      const ScreenShape s = ScreenShape::from_twice(spin(rng), spin(rng));
      long total = 0;
      for (int n = 0; n <= s.max_total_mode(); ++n) total += level_spectrum(s, n).lambda.dimension();
      bad_count += total != long(s.size());
      const int lo = std::min(s.jx.twice(), s.jy.twice()), hi = std::max(s.jx.twice(), s.jy.twice());
      auto same = [&](int n, Interval a, Interval b) {
        const auto x = level_spectrum_by_formula(s, n, a), y = level_spectrum_by_formula(s, n, b);
        bool ok = x.lambda == y.lambda;
        for (std::size_t i = 0; i < x.members.size(); ++i) ok = ok && x.members[i].mu == y.members[i].mu;
        return ok;
      };
      const bool ok = lo == hi ? same(lo, Interval::lower, Interval::upper)
                               : same(lo, Interval::lower, Interval::mid) && same(hi, Interval::mid, Interval::upper);
      bad_boundary += !ok;
    }
    return Outcome{bad_count == 0 && bad_boundary == 0,
                   std::to_string(bad_count) + " count mismatches, " + std::to_string(bad_boundary) +
                       " boundary disagreements"};
  });

  criterion(8, "group homomorphism and inverse on (5,3), 50 random pairs", 0, [&] {
    const CartesianBasis basis(shape53);
    double hom = 0.0, inv = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto a = random_element(rng), b = random_element(rng);
      const Image f = random_image(shape53, rng);
      hom = std::max(hom, max_abs_diff(apply_element(basis, f, compose(a, b)),
                                       apply_element(basis, apply_element(basis, f, b), a)));
      inv = std::max(inv, max_abs_diff(apply_element(basis, apply_element(basis, f, a), inverse(a)), f));
    }
    return Outcome{hom < 1e-9 && inv < 1e-9, cmp("compose vs sequential", hom, 1e-9) + "; " + cmp("inverse round trip", inv, 1e-9)};
  });

  criterion(9, "figure galleries: rhomboid 77 modes, multiplets n = 4, 18, 32 with lambda = 2, 7, 2", 0, [] {
    const fs::path dir = fs::temp_directory_path() / "fosc_acceptance_figures";
    fs::remove_all(dir);
    const FiguresReport r = write_figures(dir);
    std::string detail;
    bool ok = r.figures.size() == 5;
    auto find = [&](const std::string& name) -> const FigureSummary* {
      for (const auto& f : r.figures)
        if (f.name == name) return &f;
      return nullptr;
    };
    for (const char* gallery : {"cartesian-rhomboid", "lk-gallery"}) {
      const FigureSummary* f = find(gallery);
      ok = ok && f && f->images == 77 && fs::exists(f->file);
      detail += std::string(gallery) + " " + (f ? std::to_string(f->images) : "missing") + " modes; ";
    }
    if (const FigureSummary* f = find("cartesian-rhomboid")) {
      const GrayImage sheet = read_pgm(f->file);
      ok = ok && sheet.width == 17 * 13 + 2 && sheet.height == 17 * 9 + 2;  // n rows 0..16, m columns -6..10
    }
    for (const char* multiplet : {"multiplet-rotations", "multiplet-gyrations"}) {
      const FigureSummary* f = find(multiplet);
      bool levels_ok = f && f->levels.size() == 3 && fs::exists(f->file);
      std::string lam;
      if (levels_ok) {
        const int want_n[] = {32, 18, 4}, want_two_lambda[] = {4, 14, 4};
        for (int i = 0; i < 3; ++i) {
          levels_ok = levels_ok && f->levels[i].n == want_n[i] && f->levels[i].lambda.twice() == want_two_lambda[i] &&
                      f->levels[i].shown == 5;
          lam += "n=" + std::to_string(f->levels[i].n) + ":lambda=" + to_string(f->levels[i].lambda) + " ";
        }
      }
      ok = ok && levels_ok;
      detail += std::string(multiplet) + " " + lam + "; ";
    }
    ok = ok && r.glyph_six_step_error < 1e-8;
    detail += "glyph figure six-step error " + sci(r.glyph_six_step_error);
    return Outcome{ok, detail};
  });

  std::printf("%s: %d of 9 criteria failed\n", failed ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED", failed);
  return failed ? 1 : 0;
}
