#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fosc/screen.hpp"

namespace fosc {

/// Grayscale raster as stored in a PGM file: row 0 is the top row.
struct GrayImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<int> values;  // row-major, width * height

  int& at(int col, int row) { return values[std::size_t(row) * width + col]; }
  int at(int col, int row) const { return values[std::size_t(row) * width + col]; }
};

enum class PgmEncoding { ascii /* P2 */, binary /* P5 */ };

GrayImage read_pgm(const std::filesystem::path& path);
GrayImage parse_pgm(const std::string& bytes);
void write_pgm(const std::filesystem::path& path, const GrayImage& img,
               PgmEncoding encoding = PgmEncoding::binary);
std::string format_pgm(const GrayImage& img, PgmEncoding encoding);

/// Screen pixel (q_x, q_y) sits at PGM column q_x + j_x and row j_y - q_y, so
/// the (+j_x, +j_y) corner is top right. Gray levels map linearly onto [0, 1].
Image gray_to_image(const GrayImage& gray);

// Complex array file: "FKIMG1\n", "N_x N_y\n", then little-endian float64
// (re, im) pairs, row-major with q_y fastest.
inline constexpr std::string_view complex_array_magic = "FKIMG1\n";

std::string format_complex_array(const Image& img);
Image parse_complex_array(const std::string& bytes);
void save_complex_array(const std::filesystem::path& path, const Image& img);
Image load_complex_array(const std::filesystem::path& path);

enum class ImageFormat { automatic, pgm, complex_array };

/// Loads a PGM (P2/P5) or complex array file; `automatic` sniffs the magic bytes.
Image load_image(const std::filesystem::path& path, ImageFormat format = ImageFormat::automatic);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace fosc
