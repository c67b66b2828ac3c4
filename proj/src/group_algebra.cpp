#include "fosc/group_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "fosc/error.hpp"

namespace fosc {

namespace {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double four_pi = 4.0 * std::numbers::pi;

double wrap(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0.0) r += period;
  // fmod can return `period` itself after the correction for tiny negatives.
  if (r >= period) r -= period;
  return r;
}

// Below this, sin(theta/2) or cos(theta/2) is treated as zero.
constexpr double gimbal_threshold = 1e-12;

struct Lift {
  double chi;
  UnitaryRep2x2 u;  // SU(2)
};

FourierGroupElement extract(double chi, const UnitaryRep2x2& u) {
  FourierGroupElement e;
  e.chi = wrap(chi, four_pi);
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  if (s < gimbal_threshold) {
    e.theta = 0.0;
    e.phi = 0.0;
    e.psi = wrap(-2.0 * std::arg(u(0, 0)), four_pi);
    return e;
  }
  if (c < gimbal_threshold) {
    e.theta = pi;
    e.phi = 0.0;
    e.psi = wrap(2.0 * std::arg(u(1, 0)), four_pi);
    return e;
  }
  e.theta = 2.0 * std::atan2(s, c);
  const double sum = -2.0 * std::arg(u(0, 0));  // psi + phi
  const double dif = 2.0 * std::arg(u(1, 0));   // psi - phi
  double psi = 0.5 * (sum + dif);
  double phi = 0.5 * (sum - dif);
  // Shifting psi and phi together by 2pi leaves u unchanged.
  const double k = std::floor(phi / two_pi);
  phi -= k * two_pi;
  psi -= k * two_pi;
  e.phi = wrap(phi, two_pi);
  e.psi = wrap(psi, four_pi);
  return e;
}

Lift lift(const FourierGroupElement& e) { return {e.chi, su2_part(e)}; }

}  // namespace

UnitaryRep2x2 UnitaryRep2x2::adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

double UnitaryRep2x2::unitarity_defect() const {
  return max_abs_diff(*this * adjoint(), identity());
}

UnitaryRep2x2 operator*(const UnitaryRep2x2& a, const UnitaryRep2x2& b) {
  UnitaryRep2x2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

double max_abs_diff(const UnitaryRep2x2& a, const UnitaryRep2x2& b) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
  return worst;
}

UnitaryRep2x2 su2_part(const FourierGroupElement& e) {
  using namespace std::complex_literals;
  const double c = std::cos(0.5 * e.theta);
  const double s = std::sin(0.5 * e.theta);
  const cplx sum = std::exp(-0.5i * (e.psi + e.phi));
  const cplx dif = std::exp(-0.5i * (e.psi - e.phi));
  return {{sum * c, -dif * s, std::conj(dif) * s, std::conj(sum) * c}};
}

UnitaryRep2x2 to_matrix(const FourierGroupElement& e) {
  using namespace std::complex_literals;
  UnitaryRep2x2 u = su2_part(e);
  const cplx phase = std::exp(-0.5i * e.chi);
  for (auto& v : u.m) v *= phase;
  return u;
}

FourierGroupElement from_matrix(const UnitaryRep2x2& u, double tolerance) {
  using namespace std::complex_literals;
  for (const auto& v : u.m)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw ValidationError("matrix has non-finite entries");
  const double defect = u.unitarity_defect();
  if (defect > tolerance)
    throw ValidationError("matrix is not unitary (|UU^+ - I| = " + std::to_string(defect) + ")");

  double chi = wrap(-std::arg(u.determinant()), two_pi);
  UnitaryRep2x2 v = u;
  const cplx undo = std::exp(0.5i * chi);
  for (auto& x : v.m) x *= undo;
  FourierGroupElement e = extract(chi, v);
  if (e.psi >= two_pi) {
    e.psi -= two_pi;
    e.chi = wrap(e.chi + two_pi, four_pi);
  }
  return e;
}

FourierGroupElement canonicalize(const FourierGroupElement& e) {
  const Lift l = lift(e);
  return extract(l.chi, l.u);
}

FourierGroupElement compose(const FourierGroupElement& a, const FourierGroupElement& b) {
  const Lift la = lift(a);
  const Lift lb = lift(b);
  return extract(la.chi + lb.chi, la.u * lb.u);
}

FourierGroupElement inverse(const FourierGroupElement& a) {
  const Lift l = lift(a);
  return extract(-l.chi, l.u.adjoint());
}

bool same_element(const FourierGroupElement& a, const FourierGroupElement& b, double tolerance) {
  const double dchi = wrap(a.chi - b.chi + 0.5 * four_pi, four_pi) - 0.5 * four_pi;
  return std::abs(dchi) <= tolerance && max_abs_diff(su2_part(a), su2_part(b)) <= tolerance;
}

std::string to_json(const FourierGroupElement& e) {
  nlohmann::json j = {{"chi", e.chi}, {"psi", e.psi}, {"theta", e.theta}, {"phi", e.phi}};
  return j.dump();
}

FourierGroupElement element_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("element JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError("element JSON must be an object");
  FourierGroupElement e;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) throw ParseError("element JSON: '" + key + "' must be a number");
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw ParseError("element JSON: '" + key + "' is not finite");
    if (key == "chi") e.chi = v;
    else if (key == "psi") e.psi = v;
    else if (key == "theta") e.theta = v;
    else if (key == "phi") e.phi = v;
    else throw ParseError("element JSON: unknown key '" + key + "'");
  }
  return e;
}

}  // namespace fosc
