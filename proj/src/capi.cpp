#include "fosc/fosc.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "fosc/error.hpp"
#include "fosc/figures.hpp"
#include "fosc/fourier_transforms.hpp"
#include "fosc/group_algebra.hpp"
#include "fosc/image_io.hpp"
#include "fosc/mode_basis.hpp"
#include "fosc/render.hpp"
#include "fosc/verify.hpp"

struct fosc_basis {
  fosc::CartesianBasis basis;
};

struct fosc_image {
  fosc::Image image;
};

namespace {

thread_local std::string last_error;

fosc_status fail(fosc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body` and maps library exceptions onto status codes.
template <class Body>
fosc_status guarded(Body&& body) {
  try {
    body();
    return FOSC_OK;
  } catch (const fosc::DomainError& e) {
    return fail(FOSC_ERR_DOMAIN, e.what());
  } catch (const fosc::DimensionError& e) {
    return fail(FOSC_ERR_DIMENSION, e.what());
  } catch (const fosc::ParseError& e) {
    return fail(FOSC_ERR_PARSE, e.what());
  } catch (const fosc::IoError& e) {
    return fail(FOSC_ERR_IO, e.what());
  } catch (const fosc::ValidationError& e) {
    return fail(FOSC_ERR_VALIDATION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FOSC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FOSC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FOSC_ERR_INTERNAL, "unknown error");
  }
}

template <class... P>
bool any_null(P... p) {
  return ((p == nullptr) || ...);
}

#define FOSC_REQUIRE(...) \
  if (any_null(__VA_ARGS__)) return fail(FOSC_ERR_ARGUMENT, "null pointer argument")

fosc::FourierGroupElement to_cpp(const fosc_element& e) { return {e.chi, e.psi, e.theta, e.phi}; }
fosc_element to_c(const fosc::FourierGroupElement& e) { return {e.chi, e.psi, e.theta, e.phi}; }

fosc_status emit(fosc::Image img, fosc_image** out) {
  *out = new fosc_image{std::move(img)};
  return FOSC_OK;
}

fosc_status check_basis_for(const fosc_basis* b, const fosc_image* img) {
  if (!(b->basis.shape() == img->image.shape()))
    return fail(FOSC_ERR_DIMENSION, "image is " + std::to_string(img->image.shape().nx()) + "x" +
                                        std::to_string(img->image.shape().ny()) + ", basis screen is " +
                                        std::to_string(b->basis.shape().nx()) + "x" +
                                        std::to_string(b->basis.shape().ny()));
  return FOSC_OK;
}

}  // namespace

extern "C" {

const char* fosc_version(void) { return "1.0.0"; }

const char* fosc_last_error(void) { return last_error.c_str(); }

const char* fosc_status_name(fosc_status status) {
  switch (status) {
    case FOSC_OK: return "ok";
    case FOSC_ERR_ARGUMENT: return "invalid argument";
    case FOSC_ERR_DOMAIN: return "domain error";
    case FOSC_ERR_DIMENSION: return "dimension mismatch";
    case FOSC_ERR_PARSE: return "parse error";
    case FOSC_ERR_IO: return "i/o error";
    case FOSC_ERR_VALIDATION: return "validation error";
    case FOSC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

fosc_status fosc_parse_spin(const char* text, int* two_j) {
  FOSC_REQUIRE(text, two_j);
  return guarded([&] {
    const fosc::HalfInteger h = fosc::parse_half_integer(text);
    if (h.twice < 0) throw fosc::DomainError(std::string("spin must be non-negative: ") + text);
    *two_j = h.twice;
  });
}

fosc_status fosc_basis_create(int two_jx, int two_jy, fosc_basis** out) {
  FOSC_REQUIRE(out);
  return guarded([&] { *out = new fosc_basis{fosc::CartesianBasis(fosc::ScreenShape::from_twice(two_jx, two_jy))}; });
}

void fosc_basis_destroy(fosc_basis* basis) { delete basis; }

fosc_status fosc_basis_shape(const fosc_basis* basis, int* two_jx, int* two_jy) {
  FOSC_REQUIRE(basis, two_jx, two_jy);
  *two_jx = basis->basis.shape().jx.twice();
  *two_jy = basis->basis.shape().jy.twice();
  return FOSC_OK;
}

fosc_status fosc_level_info(const fosc_basis* basis, int n, int* two_lambda, int* members) {
  FOSC_REQUIRE(basis, two_lambda, members);
  return guarded([&] {
    const auto& level = basis->basis.level(n);
    *two_lambda = level.lambda.twice();
    *members = int(level.members.size());
  });
}

fosc_status fosc_level_member(const fosc_basis* basis, int n, int index, int* nx, int* ny, int* two_mu) {
  FOSC_REQUIRE(basis, nx, ny, two_mu);
  return guarded([&] {
    const auto& level = basis->basis.level(n);
    if (index < 0 || index >= int(level.members.size()))
      throw fosc::DomainError("level " + std::to_string(n) + " has no member " + std::to_string(index));
    const auto& m = level.members[index];
    *nx = m.mode.nx;
    *ny = m.mode.ny;
    *two_mu = m.mu.twice;
  });
}

fosc_status fosc_image_create(int nx, int ny, fosc_image** out) {
  FOSC_REQUIRE(out);
  return guarded([&] { emit(fosc::Image(fosc::ScreenShape::from_pixels(nx, ny)), out); });
}

fosc_status fosc_image_clone(const fosc_image* image, fosc_image** out) {
  FOSC_REQUIRE(image, out);
  return guarded([&] { emit(image->image, out); });
}

fosc_status fosc_image_load(const char* path, fosc_image** out) {
  FOSC_REQUIRE(path, out);
  return guarded([&] { emit(fosc::load_image(path), out); });
}

fosc_status fosc_image_save(const fosc_image* image, const char* path) {
  FOSC_REQUIRE(image, path);
  return guarded([&] { fosc::save_complex_array(path, image->image); });
}

fosc_status fosc_image_render(const fosc_image* image, const fosc_render_spec* spec, const char* path) {
  FOSC_REQUIRE(image, spec, path);
  if (spec->channel < FOSC_REAL || spec->channel > FOSC_PHASE)
    return fail(FOSC_ERR_ARGUMENT, "unknown render channel");
  if (spec->scaling != FOSC_FIXED && spec->scaling != FOSC_ADAPTIVE)
    return fail(FOSC_ERR_ARGUMENT, "unknown render scaling");
  return guarded([&] {
    fosc::RenderSpec s;
    s.channel = static_cast<fosc::Channel>(spec->channel);
    s.scaling = spec->scaling == FOSC_ADAPTIVE ? fosc::Scaling::adaptive : fosc::Scaling::fixed;
    s.low = spec->low;
    s.high = spec->high;
    s.bit_depth = spec->bit_depth;
    fosc::render_to_file(image->image, s, path);
  });
}

void fosc_image_destroy(fosc_image* image) { delete image; }

fosc_status fosc_image_size(const fosc_image* image, int* nx, int* ny) {
  FOSC_REQUIRE(image, nx, ny);
  *nx = image->image.shape().nx();
  *ny = image->image.shape().ny();
  return FOSC_OK;
}

fosc_status fosc_image_get(const fosc_image* image, double* buffer, size_t count) {
  FOSC_REQUIRE(image, buffer);
  const auto values = image->image.values();
  if (count < 2 * values.size()) return fail(FOSC_ERR_ARGUMENT, "pixel buffer too small");
  for (std::size_t i = 0; i < values.size(); ++i) {
    buffer[2 * i] = values[i].real();
    buffer[2 * i + 1] = values[i].imag();
  }
  return FOSC_OK;
}

fosc_status fosc_image_set(fosc_image* image, const double* buffer, size_t count) {
  FOSC_REQUIRE(image, buffer);
  auto values = image->image.values();
  if (count < 2 * values.size()) return fail(FOSC_ERR_ARGUMENT, "pixel buffer too small");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = {buffer[2 * i], buffer[2 * i + 1]};
  return FOSC_OK;
}

fosc_status fosc_image_max_abs_diff(const fosc_image* a, const fosc_image* b, double* out) {
  FOSC_REQUIRE(a, b, out);
  return guarded([&] { *out = fosc::max_abs_diff(a->image, b->image); });
}

fosc_status fosc_image_norm(const fosc_image* image, double* out) {
  FOSC_REQUIRE(image, out);
  *out = image->image.norm();
  return FOSC_OK;
}

fosc_status fosc_glyph_image(fosc_image** out) {
  FOSC_REQUIRE(out);
  return guarded([&] { emit(fosc::f_glyph(), out); });
}

fosc_status fosc_cartesian_mode(const fosc_basis* basis, int nx, int ny, fosc_image** out) {
  FOSC_REQUIRE(basis, out);
  return guarded([&] { emit(fosc::cartesian_mode(basis->basis, {nx, ny}), out); });
}

fosc_status fosc_lk_mode(const fosc_basis* basis, int n, int m, fosc_image** out) {
  FOSC_REQUIRE(basis, out);
  return guarded([&] { emit(fosc::lk_mode(basis->basis, n, m), out); });
}

fosc_status fosc_rotate(const fosc_basis* basis, const fosc_image* in, double theta, fosc_image** out) {
  FOSC_REQUIRE(basis, in, out);
  if (fosc_status s = check_basis_for(basis, in); s != FOSC_OK) return s;
  return guarded([&] { emit(fosc::rotate(basis->basis, in->image, theta), out); });
}

fosc_status fosc_gyrate(const fosc_basis* basis, const fosc_image* in, double gamma, fosc_image** out) {
  FOSC_REQUIRE(basis, in, out);
  if (fosc_status s = check_basis_for(basis, in); s != FOSC_OK) return s;
  return guarded([&] { emit(fosc::gyrate(basis->basis, in->image, gamma), out); });
}

fosc_status fosc_fourier(const fosc_basis* basis, const fosc_image* in, double chi, double beta, fosc_image** out) {
  FOSC_REQUIRE(basis, in, out);
  if (fosc_status s = check_basis_for(basis, in); s != FOSC_OK) return s;
  return guarded([&] { emit(fosc::fourier_kravchuk(basis->basis, in->image, chi, beta), out); });
}

fosc_status fosc_apply_element(const fosc_basis* basis, const fosc_image* in, const fosc_element* element,
                               fosc_euler_form form, fosc_image** out) {
  FOSC_REQUIRE(basis, in, element, out);
  if (form != FOSC_EULER_GYRATION && form != FOSC_EULER_ROTATION)
    return fail(FOSC_ERR_ARGUMENT, "unknown Euler form");
  if (fosc_status s = check_basis_for(basis, in); s != FOSC_OK) return s;
  const auto f = form == FOSC_EULER_ROTATION ? fosc::EulerForm::rotation : fosc::EulerForm::gyration;
  return guarded([&] { emit(fosc::apply_element(basis->basis, in->image, to_cpp(*element), f), out); });
}

fosc_status fosc_element_compose(const fosc_element* a, const fosc_element* b, fosc_element* out) {
  FOSC_REQUIRE(a, b, out);
  return guarded([&] { *out = to_c(fosc::compose(to_cpp(*a), to_cpp(*b))); });
}

fosc_status fosc_element_inverse(const fosc_element* a, fosc_element* out) {
  FOSC_REQUIRE(a, out);
  return guarded([&] { *out = to_c(fosc::inverse(to_cpp(*a))); });
}

fosc_status fosc_element_canonicalize(const fosc_element* a, fosc_element* out) {
  FOSC_REQUIRE(a, out);
  return guarded([&] { *out = to_c(fosc::canonicalize(to_cpp(*a))); });
}

fosc_status fosc_element_to_matrix(const fosc_element* a, double matrix[8]) {
  FOSC_REQUIRE(a, matrix);
  return guarded([&] {
    const auto u = fosc::to_matrix(to_cpp(*a));
    for (int i = 0; i < 4; ++i) {
      matrix[2 * i] = u.m[i].real();
      matrix[2 * i + 1] = u.m[i].imag();
    }
  });
}

fosc_status fosc_element_from_matrix(const double matrix[8], double tolerance, fosc_element* out) {
  FOSC_REQUIRE(matrix, out);
  return guarded([&] {
    fosc::UnitaryRep2x2 u;
    for (int i = 0; i < 4; ++i) u.m[i] = {matrix[2 * i], matrix[2 * i + 1]};
    *out = to_c(fosc::from_matrix(u, tolerance > 0 ? tolerance : 1e-10));
  });
}

fosc_status fosc_element_from_json(const char* text, fosc_element* out) {
  FOSC_REQUIRE(text, out);
  return guarded([&] { *out = to_c(fosc::element_from_json(text)); });
}

fosc_status fosc_element_to_json(const fosc_element* a, char* buffer, size_t capacity, size_t* needed) {
  FOSC_REQUIRE(a);
  std::string text;
  if (fosc_status s = guarded([&] { text = fosc::to_json(to_cpp(*a)); }); s != FOSC_OK) return s;
  if (needed) *needed = text.size() + 1;
  if (buffer == nullptr || capacity < text.size() + 1) return fail(FOSC_ERR_ARGUMENT, "JSON buffer too small");
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return FOSC_OK;
}

fosc_status fosc_write_mode_galleries(const fosc_basis* basis, const char* dir, int* cartesian_count, int* lk_count) {
  FOSC_REQUIRE(basis, dir);
  return guarded([&] {
    const std::filesystem::path root(dir);
    const auto c = fosc::write_cartesian_gallery(basis->basis, root / "cartesian");
    const auto l = fosc::write_lk_gallery(basis->basis, root / "lk");
    if (cartesian_count) *cartesian_count = c.modes;
    if (lk_count) *lk_count = l.modes;
  });
}

fosc_status fosc_write_figures(const char* dir, fosc_figure_callback callback, void* user,
                               double* glyph_six_step_error) {
  FOSC_REQUIRE(dir);
  return guarded([&] {
    const fosc::FiguresReport report = fosc::write_figures(dir);
    if (glyph_six_step_error) *glyph_six_step_error = report.glyph_six_step_error;
    if (!callback) return;
    for (const auto& f : report.figures) {
      std::vector<int> n, two_lambda, shown;
      for (const auto& l : f.levels) {
        n.push_back(l.n);
        two_lambda.push_back(l.lambda.twice());
        shown.push_back(l.shown);
      }
      const std::string file = f.file.string();
      const fosc_figure_info info{f.name.c_str(), file.c_str(), f.images, int(n.size()),
                                  n.data(),       two_lambda.data(), shown.data(), f.note.c_str()};
      callback(&info, user);
    }
  });
}

fosc_status fosc_verify(const fosc_verify_options* options, fosc_check_callback callback, void* user, int* failures) {
  return guarded([&] {
    fosc::VerifyOptions opt;
    if (options) {
      if (options->two_j && options->shape_count > 0) {
        opt.shapes.clear();
        for (int i = 0; i < options->shape_count; ++i)
          opt.shapes.push_back(fosc::ScreenShape::from_twice(options->two_j[2 * i], options->two_j[2 * i + 1]));
      }
      if (options->tol_unitary > 0) opt.tol_unitary = options->tol_unitary;
      if (options->tol_composition > 0) opt.tol_composition = options->tol_composition;
      if (options->seed) opt.seed = options->seed;
    }
    fosc::CheckCallback cb;
    if (callback)
      cb = [&](const fosc::CheckResult& r) {
        const fosc_check c{r.name.c_str(), r.shape.c_str(), r.value, r.tolerance, r.passed ? 1 : 0,
                           r.informational ? 1 : 0};
        callback(&c, user);
      };
    const auto report = fosc::run_verification(opt, cb);
    if (failures) *failures = report.failures();
  });
}

}  // extern "C"
