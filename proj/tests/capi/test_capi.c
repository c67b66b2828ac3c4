/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "fosc/fosc.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static void count_checks(const fosc_check* check, void* user) {
  (void)check;
  ++*(int*)user;
}

static void collect_figure(const fosc_figure_info* info, void* user) {
  int* found = (int*)user;
  if (strcmp(info->name, "multiplet-rotations") == 0 && info->level_count == 3) {
    found[0] = info->level_two_lambda[0] == 4 && info->level_two_lambda[1] == 14 && info->level_two_lambda[2] == 4;
  }
  if (strcmp(info->name, "cartesian-rhomboid") == 0) found[1] = info->images;
}

int main(void) {
  const double pi = 3.14159265358979323846;
  fosc_basis* basis = NULL;
  fosc_image* img = NULL;
  fosc_image* out = NULL;
  int two_j = 0, a = 0, b = 0, c = 0;

  EXPECT(fosc_parse_spin("5/2", &two_j) == FOSC_OK && two_j == 5);
  EXPECT(fosc_parse_spin("2.5", &two_j) == FOSC_OK && two_j == 5);
  EXPECT(fosc_parse_spin("x", &two_j) == FOSC_ERR_PARSE);
  EXPECT(strlen(fosc_last_error()) > 0);
  EXPECT(fosc_parse_spin(NULL, &two_j) == FOSC_ERR_ARGUMENT);

  EXPECT(fosc_basis_create(-1, 2, &basis) == FOSC_ERR_DOMAIN);
  EXPECT(fosc_basis_create(22, 14, &basis) == FOSC_OK);
  EXPECT(fosc_level_info(basis, 18, &a, &b) == FOSC_OK && a == 14 && b == 15);
  EXPECT(fosc_level_info(basis, 99, &a, &b) == FOSC_ERR_DOMAIN);
  EXPECT(fosc_level_member(basis, 4, 0, &a, &b, &c) == FOSC_OK && a == 4 && b == 0 && c == 4);
  fosc_basis_destroy(basis);

  EXPECT(fosc_basis_create(10, 6, &basis) == FOSC_OK);
  EXPECT(fosc_basis_shape(basis, &a, &b) == FOSC_OK && a == 10 && b == 6);

  /* random image, rotation norm and six-step law */
  EXPECT(fosc_image_create(11, 7, &img) == FOSC_OK);
  {
    double buf[2 * 77];
    double n0 = 0, n1 = 0, d = 1;
    int i;
    fosc_image* step = NULL;
    fosc_image* once = NULL;
    srand(3);
    for (i = 0; i < 2 * 77; ++i) buf[i] = (double)rand() / RAND_MAX - 0.5;
    EXPECT(fosc_image_set(img, buf, 2 * 77) == FOSC_OK);
    EXPECT(fosc_image_set(img, buf, 10) == FOSC_ERR_ARGUMENT);
    EXPECT(fosc_rotate(basis, img, 0.7, &out) == FOSC_OK);
    fosc_image_norm(img, &n0);
    fosc_image_norm(out, &n1);
    EXPECT(fabs(n1 / n0 - 1) < 1e-12);
    fosc_image_destroy(out);

    EXPECT(fosc_image_clone(img, &step) == FOSC_OK);
    for (i = 0; i < 6; ++i) {
      fosc_image* next = NULL;
      EXPECT(fosc_rotate(basis, step, pi / 6, &next) == FOSC_OK);
      fosc_image_destroy(step);
      step = next;
    }
    EXPECT(fosc_rotate(basis, img, pi, &once) == FOSC_OK);
    EXPECT(fosc_image_max_abs_diff(step, once, &d) == FOSC_OK && d < 1e-8);
    fosc_image_destroy(step);
    fosc_image_destroy(once);
  }

  /* gyration, Fourier, element application */
  {
    fosc_element e = {0.3, 1.2, 0.8, -0.4}, inv, id = {0, 0, 0, 0}, comp;
    fosc_image* back = NULL;
    double d = 1, m[8];
    EXPECT(fosc_gyrate(basis, img, pi / 8, &out) == FOSC_OK);
    fosc_image_destroy(out);
    EXPECT(fosc_fourier(basis, img, 0.2, 0.5, &out) == FOSC_OK);
    fosc_image_destroy(out);
    EXPECT(fosc_apply_element(basis, img, &e, FOSC_EULER_GYRATION, &out) == FOSC_OK);
    EXPECT(fosc_element_inverse(&e, &inv) == FOSC_OK);
    EXPECT(fosc_apply_element(basis, out, &inv, FOSC_EULER_ROTATION, &back) == FOSC_OK);
    EXPECT(fosc_image_max_abs_diff(back, img, &d) == FOSC_OK && d < 1e-9);
    EXPECT(fosc_apply_element(basis, img, &e, (fosc_euler_form)7, &back) == FOSC_ERR_ARGUMENT);
    fosc_image_destroy(back);
    fosc_image_destroy(out);

    EXPECT(fosc_element_compose(&e, &inv, &comp) == FOSC_OK);
    EXPECT(fosc_element_to_matrix(&comp, m) == FOSC_OK);
    EXPECT(fabs(m[0] - 1) < 1e-12 && fabs(m[2]) < 1e-12 && fabs(m[6] - 1) < 1e-12);
    EXPECT(fosc_element_to_matrix(&id, m) == FOSC_OK);
    EXPECT(fosc_element_from_matrix(m, 0, &comp) == FOSC_OK && comp.theta == 0);
    m[2] = 0.5;
    EXPECT(fosc_element_from_matrix(m, 0, &comp) == FOSC_ERR_VALIDATION);
  }

  /* JSON */
  {
    fosc_element e = {0.25, 0.5, 1, 2}, back;
    char small[4];
    char buf[256];
    size_t needed = 0;
    EXPECT(fosc_element_to_json(&e, small, sizeof small, &needed) == FOSC_ERR_ARGUMENT && needed > 4);
    EXPECT(fosc_element_to_json(&e, buf, sizeof buf, NULL) == FOSC_OK);
    EXPECT(fosc_element_from_json(buf, &back) == FOSC_OK && back.phi == 2 && back.chi == 0.25);
    EXPECT(fosc_element_from_json("{\"bogus\": 1}", &back) == FOSC_ERR_PARSE);
  }

  /* modes and shape mismatch */
  {
    fosc_basis* other = NULL;
    fosc_image* lk = NULL;
    EXPECT(fosc_lk_mode(basis, 4, 2, &lk) == FOSC_OK);
    EXPECT(fosc_lk_mode(basis, 4, 3, &out) == FOSC_ERR_DOMAIN);
    EXPECT(fosc_cartesian_mode(basis, 11, 0, &out) == FOSC_ERR_DOMAIN);
    EXPECT(fosc_basis_create(6, 10, &other) == FOSC_OK);
    EXPECT(fosc_rotate(other, lk, 0.1, &out) == FOSC_ERR_DIMENSION);
    fosc_basis_destroy(other);
    fosc_image_destroy(lk);
  }

  /* files */
  {
    const char* path = "capi_roundtrip.fkimg";
    fosc_image* loaded = NULL;
    fosc_render_spec spec = {FOSC_REAL, FOSC_ADAPTIVE, -1, 1, 8};
    double d = 1;
    EXPECT(fosc_image_save(img, path) == FOSC_OK);
    EXPECT(fosc_image_load(path, &loaded) == FOSC_OK);
    EXPECT(fosc_image_max_abs_diff(img, loaded, &d) == FOSC_OK && d == 0);
    EXPECT(fosc_image_render(img, &spec, "capi_render.pgm") == FOSC_OK);
    EXPECT(fosc_image_load("does/not/exist.pgm", &out) == FOSC_ERR_IO);
    fosc_image_destroy(loaded);
    remove(path);
    remove("capi_render.pgm");
  }

  /* galleries, figures, verification */
  {
    int nc = 0, nl = 0, checks = 0, failed = -1;
    int found[2] = {0, 0};
    const int shapes[] = {4, 2};
    fosc_verify_options opt = {shapes, 1, 0, 0, 0};
    double six = 1;
    EXPECT(fosc_write_mode_galleries(basis, "capi_modes", &nc, &nl) == FOSC_OK && nc == 77 && nl == 77);
    EXPECT(fosc_write_figures("capi_figures", collect_figure, found, &six) == FOSC_OK);
    EXPECT(found[0] == 1 && found[1] == 77 && six < 1e-8);
    EXPECT(fosc_verify(&opt, count_checks, &checks, &failed) == FOSC_OK);
    EXPECT(failed == 0 && checks > 20);
  }

  fosc_image_destroy(img);
  fosc_basis_destroy(basis);
  fosc_basis_destroy(NULL);
  fosc_image_destroy(NULL);

  if (failures) fprintf(stderr, "%d C API expectation(s) failed\n", failures);
  else printf("C API: all expectations met\n");
  return failures ? 1 : 0;
}
