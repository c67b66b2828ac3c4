#include "fosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fosc/fourier_transforms.hpp"
#include "fosc/group_algebra.hpp"
#include "fosc/image_io.hpp"
#include "fosc/render.hpp"
#include "fosc/special_functions.hpp"

namespace fosc {

namespace {

constexpr double pi = std::numbers::pi;

std::string shape_label(const ScreenShape& s) {
  return "(" + to_string(s.jx) + "," + to_string(s.jy) + ")";
}

class Recorder {
 public:
  Recorder(VerifyReport& report, const CheckCallback& cb) : report_(report), cb_(cb) {}

  void at_most(std::string name, std::string shape, double value, double tol, bool info = false) {
    CheckResult r{std::move(name), std::move(shape), value, tol, value <= tol, info};
    if (!std::isfinite(value)) r.passed = false;
    report_.checks.push_back(r);
    if (cb_) cb_(r);
  }

 private:
  VerifyReport& report_;
  const CheckCallback& cb_;
};

Image random_image(const ScreenShape& shape, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Image img(shape);
  for (auto& v : img.values()) v = {g(rng), g(rng)};
  return img;
}

FourierGroupElement random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2 * pi, 2 * pi);
  return {u(rng), u(rng), u(rng), u(rng)};
}

double relative_norm_change(const Image& in, const Image& out) {
  return std::abs(out.norm() / in.norm() - 1.0);
}

template <class Op>
double worst_over(int count, Op&& op) {
  double worst = 0.0;
  for (int i = 0; i < count; ++i) worst = std::max(worst, op());
  return worst;
}

double max_off_level(const CartesianBasis& basis, const ModeCoefficients& c, int n) {
  double worst = 0.0;
  for (int nx = 0; nx < basis.shape().nx(); ++nx)
    for (int ny = 0; ny < basis.shape().ny(); ++ny)
      if (nx + ny != n) worst = std::max(worst, std::abs(c(nx, ny)));
  return worst;
}

void special_function_checks(Recorder& rec, double tol) {
  double orth = 0.0, addition = 0.0, period = 0.0;
  const double betas[] = {0.3, 1.1, pi / 2, 2.9, -0.7};
  for (int two_l = 0; two_l <= 80; ++two_l) {
    const Spin l = Spin::from_twice(two_l);
    for (double b : betas) {
      const RealMatrix d = wigner_little_d(l, b).entries();
      const RealMatrix dd = d * d.transpose();
      orth = std::max(orth, max_abs_diff(dd, RealMatrix::identity(d.rows())));
      if (two_l <= 40) {
        const RealMatrix lhs = d * wigner_little_d(l, 0.45).entries();
        addition = std::max(addition, max_abs_diff(lhs, wigner_little_d(l, b + 0.45).entries()));
        RealMatrix shifted = wigner_little_d(l, b + 2 * pi).entries();
        const double sign = (two_l % 2) ? -1.0 : 1.0;
        for (double& x : shifted.data()) x *= sign;
        period = std::max(period, max_abs_diff(shifted, d));
        period = std::max(period, max_abs_diff(wigner_little_d(l, b + 4 * pi).entries(), d));
      }
    }
  }
  rec.at_most("little-d orthogonality (2 lambda <= 80)", "", orth, tol);
  rec.at_most("little-d addition law", "", addition, tol);
  rec.at_most("little-d 2pi and 4pi periodicity", "", period, tol);

  double cross = 0.0, kortho = 0.0;
  for (int two_j = 0; two_j <= 40; ++two_j) {
    const Spin j = Spin::from_twice(two_j);
    const LittleDMatrix d = wigner_little_d(j, pi / 2);
    const RealMatrix table = kravchuk_table(j);
    for (int n = 0; n <= two_j; ++n)
      for (int s = 0; s <= two_j; ++s) {
        const HalfInteger row{2 * n - two_j};
        const HalfInteger col{2 * s - two_j};
        cross = std::max(cross, std::abs(d.at(row, col) - table(n, s)));
      }
    kortho = std::max(kortho, max_abs_diff(table * table.transpose(), RealMatrix::identity(table.rows())));
  }
  rec.at_most("Kravchuk function = little-d(pi/2) (2j <= 40)", "", cross, tol);
  rec.at_most("Kravchuk function orthonormality", "", kortho, tol);
}

void group_checks(Recorder& rec, std::mt19937_64& rng, int pairs) {
  double hom = 0.0, round = 0.0, inv = 0.0;
  bool canonical = true;
  for (int i = 0; i < std::max(pairs, 20); ++i) {
    const auto a = random_element(rng), b = random_element(rng);
    hom = std::max(hom, max_abs_diff(to_matrix(compose(a, b)), to_matrix(a) * to_matrix(b)));
    const auto e = from_matrix(to_matrix(a));
    round = std::max(round, max_abs_diff(to_matrix(e), to_matrix(a)));
    canonical = canonical && e.chi >= 0 && e.chi < 4 * pi && e.psi >= 0 && e.psi < 2 * pi && e.theta >= 0 &&
                e.theta <= pi && e.phi >= 0 && e.phi < 2 * pi;
    inv = std::max(inv, max_abs_diff(to_matrix(compose(a, inverse(a))), UnitaryRep2x2::identity()));
  }
  rec.at_most("to_matrix homomorphism", "", hom, 1e-12);
  rec.at_most("to_matrix o from_matrix identity", "", round, 1e-12);
  rec.at_most("from_matrix canonical ranges", "", canonical ? 0.0 : 1.0, 0.0);
  rec.at_most("compose with inverse is identity", "", inv, 1e-12);
}

void file_checks(Recorder& rec, std::mt19937_64& rng) {
  const ScreenShape shape = ScreenShape::from_twice(10, 6);
  const Image img = random_image(shape, rng);
  const Image back = parse_complex_array(format_complex_array(img));
  bool identical = back.shape() == img.shape();
  for (std::size_t i = 0; identical && i < img.size(); ++i)
    identical = back.values()[i] == img.values()[i];
  rec.at_most("complex array file round trip (bit exact)", "", identical ? 0.0 : 1.0, 0.0);

  Image real(shape);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& v : real.values()) v = u(rng);
  double worst = 0.0;
  for (int depth : {8, 16})
    for (auto enc : {PgmEncoding::ascii, PgmEncoding::binary}) {
      RenderSpec spec;
      spec.low = 0.0;
      spec.high = 1.0;
      spec.bit_depth = depth;
      const Image loaded = gray_to_image(parse_pgm(format_pgm(render(real, spec), enc)));
      worst = std::max(worst, max_abs_diff(loaded, real) * double(spec.maxval()));
    }
  rec.at_most("PGM round trip within half a gray step", "", worst, 0.5 + 1e-9);
}

void shape_checks(Recorder& rec, const ScreenShape& shape, const VerifyOptions& opt, std::mt19937_64& rng) {
  const std::string lbl = shape_label(shape);
  const CartesianBasis basis(shape);
  const double tu = opt.tol_unitary, tc = opt.tol_composition;

  // Level bookkeeping.
  long count = 0;
  bool mu_ok = true;
  for (const auto& level : basis.levels()) {
    count += level.lambda.dimension();
    for (std::size_t i = 0; i < level.members.size(); ++i)
      mu_ok = mu_ok && level.members[i].mu.twice == level.lambda.twice() - 2 * int(i);
  }
  rec.at_most("mode count sum (2 lambda + 1) = NxNy", lbl, std::abs(double(count) - double(shape.size())), 0.0);
  rec.at_most("mu runs over -lambda..lambda in unit steps", lbl, mu_ok ? 0.0 : 1.0, 0.0);
  {
    const int lo = std::min(shape.jx.twice(), shape.jy.twice());
    const int hi = std::max(shape.jx.twice(), shape.jy.twice());
    auto same = [&](int n, Interval a, Interval b) {
      const auto la = level_spectrum_by_formula(shape, n, a), lb = level_spectrum_by_formula(shape, n, b);
      if (la.lambda.twice() != lb.lambda.twice()) return false;
      for (std::size_t i = 0; i < la.members.size(); ++i)
        if (la.members[i].mu.twice != lb.members[i].mu.twice) return false;
      return true;
    };
    const bool ok = lo == hi ? same(lo, Interval::lower, Interval::upper)
                             : same(lo, Interval::lower, Interval::mid) && same(hi, Interval::mid, Interval::upper);
    rec.at_most("boundary levels agree under adjacent formulas", lbl, ok ? 0.0 : 1.0, 0.0);
  }

  // Checkerboard relation with the (-1)^{(q_x-j_x)+(q_y-j_y)} factor.
  {
    double worst = 0.0;
    const int tx = shape.jx.twice(), ty = shape.jy.twice();
    for (int nx = 0; nx <= tx; ++nx)
      for (int ny = 0; ny <= ty; ++ny)
        for (int ix = 0; ix <= tx; ++ix)
          for (int iy = 0; iy <= ty; ++iy) {
            const double sign = ((ix - tx) + (iy - ty)) % 2 ? -1.0 : 1.0;
            worst = std::max(worst, std::abs(basis.mode_value({tx - nx, ty - ny}, ix, iy) -
                                             sign * basis.mode_value({nx, ny}, ix, iy)));
          }
    rec.at_most("checkerboard relation", lbl, worst, 1e-12);
  }

  // Orthonormality and completeness.
  const auto psi = cartesian_modes(basis);
  rec.at_most("Cartesian basis Gram = I", lbl, gram_deviation(psi), tu);
  rec.at_most("Cartesian basis completeness", lbl, completeness_deviation(psi), tu);
  const auto lk = lk_modes(basis);
  rec.at_most("LK basis Gram = I", lbl, gram_deviation(lk), tu);
  rec.at_most("LK basis completeness", lbl, completeness_deviation(lk), tu);

  // Unitarity.
  std::uniform_real_distribution<double> angle(-pi, pi);
  const int k = opt.random_images;
  auto unitary = [&](const char* name, auto&& op) {
    rec.at_most(std::string("norm preserved by ") + name, lbl, worst_over(k, [&] {
                  const Image f = random_image(shape, rng);
                  return relative_norm_change(f, op(f));
                }), tu);
  };
  unitary("rotation", [&](const Image& f) { return rotate(basis, f, angle(rng)); });
  unitary("gyration", [&](const Image& f) { return gyrate(basis, f, angle(rng)); });
  unitary("K_S", [&](const Image& f) { return fourier_kravchuk(basis, f, angle(rng), 0.0); });
  unitary("K_A", [&](const Image& f) { return fourier_kravchuk(basis, f, 0.0, angle(rng)); });
  unitary("D(chi;psi,theta,phi)", [&](const Image& f) { return apply_element(basis, f, random_element(rng)); });

  // Group laws.
  rec.at_most("rotation group law", lbl, worst_over(k, [&] {
                const Image f = random_image(shape, rng);
                const double a = angle(rng), b = angle(rng);
                return max_abs_diff(rotate(basis, rotate(basis, f, b), a), rotate(basis, f, a + b));
              }), tc);
  rec.at_most("rotation by 2pi is identity", lbl, worst_over(k, [&] {
                const Image f = random_image(shape, rng);
                return max_abs_diff(rotate(basis, f, 2 * pi), f);
              }), tc);
  rec.at_most("gyration group law", lbl, worst_over(k, [&] {
                const Image f = random_image(shape, rng);
                const double a = angle(rng), b = angle(rng);
                return max_abs_diff(gyrate(basis, gyrate(basis, f, b), a), gyrate(basis, f, a + b));
              }), tc);
  {
    const Image f = random_image(shape, rng);
    Image six = f;
    const ModeCoefficients c0 = analyze(basis, f);
    ModeCoefficients c = c0;
    for (int i = 0; i < 6; ++i) c = rotate_coeffs(basis, c, pi / 6);
    six = synthesize(basis, c);
    rec.at_most("six rotations by pi/6 equal one by pi", lbl, max_abs_diff(six, rotate(basis, f, pi)), 1e-8);
    const Image by_pi = rotate(basis, f, pi);
    rec.at_most("rotation by pi is the level sign map", lbl,
                max_abs_diff(by_pi, synthesize(basis, level_sign_map(basis, c0))), tc);
    rec.at_most("rotation by pi vs pixel inversion (differs on odd mid levels)", lbl,
                max_abs_diff(by_pi, pixel_inversion(f)), tc, true);
  }

  // Level invariance: a unit mode stays on its level.
  {
    double worst = 0.0;
    for (int n = 0; n <= shape.max_total_mode(); n += std::max(1, shape.max_total_mode() / 6)) {
      ModeCoefficients c(shape);
      const ModeIndex m = basis.level(n).members.front().mode;
      c(m.nx, m.ny) = 1.0;
      worst = std::max(worst, max_off_level(basis, rotate_coeffs(basis, c, angle(rng)), n));
      worst = std::max(worst, max_off_level(basis, gyrate_coeffs(basis, c, angle(rng)), n));
    }
    rec.at_most("rotation and gyration keep each level", lbl, worst, 0.0);
  }

  // Real input stays real under rotation.
  {
    Image f(shape);
    std::normal_distribution<double> g;
    for (auto& v : f.values()) v = g(rng);
    double worst = 0.0;
    const Image rotated = rotate(basis, f, angle(rng));
    for (const auto& v : rotated.values()) worst = std::max(worst, std::abs(v.imag()));
    rec.at_most("rotation keeps real images real", lbl, worst, tu);
  }

  // Gyration forms and LK symmetry.
  {
    double worst = 0.0;
    const ModeCoefficients c = analyze(basis, random_image(shape, rng));
    for (double g : {pi / 16, pi / 8, 3 * pi / 16, pi / 4})
      worst = std::max(worst, max_abs_diff(gyrate_coeffs(basis, c, g), gyrate_sandwich_coeffs(basis, c, g)));
    rec.at_most("direct gyration = K_A(pi/4) R K_A(-pi/4)", lbl, worst, tu);
  }
  {
    double worst = 0.0;
    for (const auto& level : basis.levels())
      for (const auto& mem : level.members) {
        const int m = mem.mu.twice;
        if (m <= 0) continue;
        const Image plus = lk_mode(basis, level.n, m), minus = lk_mode(basis, level.n, -m);
        for (std::size_t i = 0; i < plus.size(); ++i)
          worst = std::max(worst, std::abs(minus.values()[i] - std::conj(plus.values()[i])));
      }
    rec.at_most("LK conjugate symmetry Lambda(n,-m) = conj Lambda(n,m)", lbl, worst, 1e-12);
  }

  // Group action.
  {
    double hom = 0.0, inv = 0.0, forms = 0.0;
    for (int i = 0; i < opt.random_pairs; ++i) {
      const auto a = random_element(rng), b = random_element(rng);
      const Image f = random_image(shape, rng);
      hom = std::max(hom, max_abs_diff(apply_element(basis, f, compose(a, b)),
                                       apply_element(basis, apply_element(basis, f, b), a)));
      inv = std::max(inv, max_abs_diff(apply_element(basis, apply_element(basis, f, a), inverse(a)), f));
      forms = std::max(forms, max_abs_diff(apply_element(basis, f, a, EulerForm::gyration),
                                           apply_element(basis, f, a, EulerForm::rotation)));
    }
    rec.at_most("apply(compose(a,b)) = apply(a) o apply(b)", lbl, hom, tc);
    rec.at_most("inverse element round trip", lbl, inv, tc);
    rec.at_most("gyration and rotation Euler forms agree", lbl, forms, tc);
  }
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  return int(std::count_if(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return !c.passed && !c.informational; }));
}

namespace {

// max |sum_p conj(v_i[p]) v_k[p] - delta_ik| over rows v_i of a split re/im
// matrix stored row-major; plain real arithmetic keeps the inner loop tight.
double row_gram_deviation(const std::vector<double>& re, const std::vector<double>& im, std::size_t rows,
                          std::size_t len) {
  double worst = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const double* ri = &re[i * len];
    const double* ii = &im[i * len];
    for (std::size_t k = i; k < rows; ++k) {
      const double* rk = &re[k * len];
      const double* ik = &im[k * len];
      double sr = 0.0, si = 0.0;
      for (std::size_t p = 0; p < len; ++p) {
        sr += ri[p] * rk[p] + ii[p] * ik[p];
        si += ri[p] * ik[p] - ii[p] * rk[p];
      }
      worst = std::max(worst, std::hypot(sr - (i == k ? 1.0 : 0.0), si));
    }
  }
  return worst;
}

}  // namespace

double gram_deviation(const std::vector<Image>& modes) {
  if (modes.empty()) return 0.0;
  const std::size_t len = modes.front().size();
  std::vector<double> re(modes.size() * len), im(modes.size() * len);
  for (std::size_t m = 0; m < modes.size(); ++m)
    for (std::size_t p = 0; p < len; ++p) {
      re[m * len + p] = modes[m].values()[p].real();
      im[m * len + p] = modes[m].values()[p].imag();
    }
  return row_gram_deviation(re, im, modes.size(), len);
}

double completeness_deviation(const std::vector<Image>& modes) {
  if (modes.empty()) return 0.0;
  const std::size_t pixels = modes.front().size();
  // Rows are pixels; conj() makes the row Gram equal sum_i a_i(q) conj(a_i(q')).
  std::vector<double> re(pixels * modes.size()), im(pixels * modes.size());
  for (std::size_t m = 0; m < modes.size(); ++m)
    for (std::size_t p = 0; p < pixels; ++p) {
      re[p * modes.size() + m] = modes[m].values()[p].real();
      im[p * modes.size() + m] = -modes[m].values()[p].imag();
    }
  return row_gram_deviation(re, im, pixels, modes.size());
}

std::vector<Image> cartesian_modes(const CartesianBasis& basis) {
  std::vector<Image> out;
  for (int nx = 0; nx < basis.shape().nx(); ++nx)
    for (int ny = 0; ny < basis.shape().ny(); ++ny) out.push_back(cartesian_mode(basis, {nx, ny}));
  return out;
}

std::vector<Image> lk_modes(const CartesianBasis& basis) {
  std::vector<Image> out;
  for (const auto& level : basis.levels())
    for (const auto& mem : level.members) out.push_back(lk_mode(basis, level.n, mem.mu.twice));
  return out;
}

ModeCoefficients level_sign_map(const CartesianBasis& basis, const ModeCoefficients& coeffs) {
  ModeCoefficients out = coeffs;
  for (const auto& level : basis.levels())
    if (level.lambda.twice() % 2)
      for (const auto& mem : level.members) out(mem.mode.nx, mem.mode.ny) *= -1.0;
  return out;
}

Image pixel_inversion(const Image& image) {
  const ScreenShape& s = image.shape();
  Image out(s);
  for (int ix = 0; ix < s.nx(); ++ix)
    for (int iy = 0; iy < s.ny(); ++iy) out(ix, iy) = image(s.nx() - 1 - ix, s.ny() - 1 - iy);
  return out;
}

VerifyReport run_verification(const VerifyOptions& options, const CheckCallback& on_check) {
  VerifyReport report;
  Recorder rec(report, on_check);
  std::mt19937_64 rng(options.seed);
  special_function_checks(rec, options.tol_unitary);
  group_checks(rec, rng, options.random_pairs);
  file_checks(rec, rng);
  for (const auto& shape : options.shapes) shape_checks(rec, shape, options, rng);
  return report;
}

}  // namespace fosc
