/* C interface to the finite-oscillator image library.
 *
 * Objects are opaque handles released with the matching *_destroy function.
 * Every fallible call returns a fosc_status; on failure fosc_last_error()
 * holds a message for the calling thread until its next failing call.
 *
 * Spins are passed doubled (two_j = 2j = pixel count - 1). Angles are radians.
 * Pixel buffers are interleaved (re, im) doubles, row-major over
 * (q_x + j_x, q_y + j_y) with q_y fastest. */
#ifndef FOSC_H
#define FOSC_H

#include <stddef.h>

#if defined(_WIN32)
#  define FOSC_API __declspec(dllexport)
#else
#  define FOSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fosc_status {
  FOSC_OK = 0,
  FOSC_ERR_ARGUMENT = 1,   /* null pointer, bad enum value, buffer too small */
  FOSC_ERR_DOMAIN = 2,     /* parameter outside its mathematical domain */
  FOSC_ERR_DIMENSION = 3,  /* shape mismatch */
  FOSC_ERR_PARSE = 4,
  FOSC_ERR_IO = 5,
  FOSC_ERR_VALIDATION = 6, /* e.g. a non-unitary matrix */
  FOSC_ERR_INTERNAL = 7
} fosc_status;

typedef struct fosc_basis fosc_basis;
typedef struct fosc_image fosc_image;

typedef struct fosc_element {
  double chi;
  double psi;
  double theta;
  double phi;
} fosc_element;

typedef enum fosc_channel { FOSC_REAL = 0, FOSC_IMAG = 1, FOSC_ABS = 2, FOSC_PHASE = 3 } fosc_channel;
typedef enum fosc_scaling { FOSC_FIXED = 0, FOSC_ADAPTIVE = 1 } fosc_scaling;
typedef enum fosc_euler_form { FOSC_EULER_GYRATION = 0, FOSC_EULER_ROTATION = 1 } fosc_euler_form;

typedef struct fosc_render_spec {
  fosc_channel channel;
  fosc_scaling scaling;
  double low; /* fixed range; ignored when adaptive */
  double high;
  int bit_depth; /* 8 or 16 */
} fosc_render_spec;

FOSC_API const char* fosc_version(void);
FOSC_API const char* fosc_last_error(void);
FOSC_API const char* fosc_status_name(fosc_status status);

/* "5", "2.5" or "5/2" -> 10, 5, 5. */
FOSC_API fosc_status fosc_parse_spin(const char* text, int* two_j);

/* ---- basis ---- */
FOSC_API fosc_status fosc_basis_create(int two_jx, int two_jy, fosc_basis** out);
FOSC_API void fosc_basis_destroy(fosc_basis* basis);
FOSC_API fosc_status fosc_basis_shape(const fosc_basis* basis, int* two_jx, int* two_jy);
/* Level n: doubled spin and number of members (2 lambda + 1). */
FOSC_API fosc_status fosc_level_info(const fosc_basis* basis, int n, int* two_lambda, int* members);
/* Member `index` of level n, in descending mu. */
FOSC_API fosc_status fosc_level_member(const fosc_basis* basis, int n, int index, int* nx, int* ny,
                                       int* two_mu);

/* ---- images ---- */
FOSC_API fosc_status fosc_image_create(int nx, int ny, fosc_image** out);
FOSC_API fosc_status fosc_image_clone(const fosc_image* image, fosc_image** out);
/* PGM (P2/P5) or complex array file, detected from the content. */
FOSC_API fosc_status fosc_image_load(const char* path, fosc_image** out);
/* Complex array file. */
FOSC_API fosc_status fosc_image_save(const fosc_image* image, const char* path);
FOSC_API fosc_status fosc_image_render(const fosc_image* image, const fosc_render_spec* spec, const char* path);
FOSC_API void fosc_image_destroy(fosc_image* image);
FOSC_API fosc_status fosc_image_size(const fosc_image* image, int* nx, int* ny);
/* `count` is the number of doubles in `buffer` and must be at least 2 nx ny. */
FOSC_API fosc_status fosc_image_get(const fosc_image* image, double* buffer, size_t count);
FOSC_API fosc_status fosc_image_set(fosc_image* image, const double* buffer, size_t count);
FOSC_API fosc_status fosc_image_max_abs_diff(const fosc_image* a, const fosc_image* b, double* out);
FOSC_API fosc_status fosc_image_norm(const fosc_image* image, double* out);
/* The shipped 41 x 25 "F" glyph. */
FOSC_API fosc_status fosc_glyph_image(fosc_image** out);

/* ---- modes ---- */
FOSC_API fosc_status fosc_cartesian_mode(const fosc_basis* basis, int nx, int ny, fosc_image** out);
/* Laguerre-Kravchuk mode with m = 2 mu. */
FOSC_API fosc_status fosc_lk_mode(const fosc_basis* basis, int n, int m, fosc_image** out);

/* ---- transforms: the result is a new image ---- */
FOSC_API fosc_status fosc_rotate(const fosc_basis* basis, const fosc_image* in, double theta, fosc_image** out);
FOSC_API fosc_status fosc_gyrate(const fosc_basis* basis, const fosc_image* in, double gamma, fosc_image** out);
/* Symmetric (chi) and antisymmetric (beta) fractional Fourier-Kravchuk transforms. */
FOSC_API fosc_status fosc_fourier(const fosc_basis* basis, const fosc_image* in, double chi, double beta,
                                  fosc_image** out);
FOSC_API fosc_status fosc_apply_element(const fosc_basis* basis, const fosc_image* in, const fosc_element* element,
                                        fosc_euler_form form, fosc_image** out);

/* ---- group elements ---- */
/* a o b acts as b first, then a. */
FOSC_API fosc_status fosc_element_compose(const fosc_element* a, const fosc_element* b, fosc_element* out);
FOSC_API fosc_status fosc_element_inverse(const fosc_element* a, fosc_element* out);
FOSC_API fosc_status fosc_element_canonicalize(const fosc_element* a, fosc_element* out);
/* 2x2 matrix as 8 doubles: (re, im) of u00, u01, u10, u11. */
FOSC_API fosc_status fosc_element_to_matrix(const fosc_element* a, double matrix[8]);
FOSC_API fosc_status fosc_element_from_matrix(const double matrix[8], double tolerance, fosc_element* out);
FOSC_API fosc_status fosc_element_from_json(const char* text, fosc_element* out);
/* Writes at most `capacity` bytes including the terminator; `needed` (optional)
 * receives the full length + 1. FOSC_ERR_ARGUMENT if the buffer is too small. */
FOSC_API fosc_status fosc_element_to_json(const fosc_element* a, char* buffer, size_t capacity, size_t* needed);

/* ---- galleries, figures, verification ---- */
/* Writes every Cartesian mode to <dir>/cartesian and every LK mode to <dir>/lk, each with a contact sheet. */
FOSC_API fosc_status fosc_write_mode_galleries(const fosc_basis* basis, const char* dir, int* cartesian_count,
                                               int* lk_count);

typedef struct fosc_figure_info {
  const char* name;
  const char* file;
  int images;
  int level_count;
  const int* level_n;          /* level_count entries each */
  const int* level_two_lambda;
  const int* level_shown;
  const char* note;
} fosc_figure_info;

typedef void (*fosc_figure_callback)(const fosc_figure_info* info, void* user);

/* Regenerates the figure set under `dir`; `glyph_six_step_error` (optional)
 * receives max |R(pi/6)^6 F - R(pi) F|. */
FOSC_API fosc_status fosc_write_figures(const char* dir, fosc_figure_callback callback, void* user,
                                        double* glyph_six_step_error);

typedef struct fosc_check {
  const char* name;
  const char* shape; /* empty when shape independent */
  double value;
  double tolerance;
  int passed;
  int informational;
} fosc_check;

typedef void (*fosc_check_callback)(const fosc_check* check, void* user);

typedef struct fosc_verify_options {
  const int* two_j; /* pairs (two_jx, two_jy); NULL selects (5,3), (11,7), (20,12) */
  int shape_count;
  double tol_unitary;     /* <= 0 selects 1e-10 */
  double tol_composition; /* <= 0 selects 1e-9 */
  unsigned long long seed;
} fosc_verify_options;

/* Runs the invariant suite. `failures` receives the number of failed checks. */
FOSC_API fosc_status fosc_verify(const fosc_verify_options* options, fosc_check_callback callback, void* user,
                                 int* failures);

#ifdef __cplusplus
}
#endif

#endif
