#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fosc/image_io.hpp"
#include "fosc/mode_basis.hpp"

namespace fosc {

/// White-on-black letter "F" on the 41 x 25 screen (j_x, j_y) = (20, 12), values 0/1.
Image f_glyph();
GrayImage f_glyph_pgm();

struct GalleryReport {
  int modes = 0;  // individual mode images rendered
  std::vector<std::filesystem::path> files;
};

/// Every Cartesian mode as its own PGM (fixed range (-1, 1)) plus a contact
/// sheet laid out on the rhomboid: row = total mode n (n = 0 at the bottom),
/// column = m = n_x - n_y.
GalleryReport write_cartesian_gallery(const CartesianBasis& basis, const std::filesystem::path& dir);

/// Every Laguerre-Kravchuk mode, one row per level n and column m = 2 mu:
/// real part of Lambda_{n,m} for m >= 0, imaginary part of Lambda_{n,|m|} for m < 0.
GalleryReport write_lk_gallery(const CartesianBasis& basis, const std::filesystem::path& dir);

struct LevelRow {
  int n = 0;
  Spin lambda;
  int shown = 0;  // states drawn for this level
};

struct FigureSummary {
  std::string name;
  std::filesystem::path file;
  int images = 0;
  std::vector<LevelRow> levels;
  std::string note;
};

struct FiguresReport {
  std::vector<FigureSummary> figures;
  /// max |R(pi/6)^6 F - R(pi) F| for the glyph sequence.
  double glyph_six_step_error = 0.0;
};

/// Regenerates the desk-scale figure set: Cartesian rhomboid (5,3), multiplet
/// rotations and gyrations on (11,7) at n = 4, 18, 32, successive pi/6
/// rotations of the glyph on (20,12), and the LK gallery on (5,3).
FiguresReport write_figures(const std::filesystem::path& dir);

}  // namespace fosc
