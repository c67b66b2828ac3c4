#pragma once

#include <optional>
#include <vector>

#include "fosc/image_io.hpp"
#include "fosc/screen.hpp"

namespace fosc {

enum class Channel { real, imag, abs, phase };
enum class Scaling { fixed, adaptive };

/// How a complex image becomes gray levels.
///
/// fixed: [low, high] maps to [0, maxval], values outside are clamped.
/// adaptive: the smallest pixel maps to black and the largest to white; a
///   constant image renders as uniform mid-gray.
/// The phase channel always maps [-pi, pi) linearly onto [0, maxval].
struct RenderSpec {
  Channel channel = Channel::real;
  Scaling scaling = Scaling::fixed;
  double low = -1.0;
  double high = 1.0;
  int bit_depth = 8;  // 8 or 16

  int maxval() const { return bit_depth == 16 ? 65535 : 255; }
};

double channel_value(std::complex<double> v, Channel channel);

/// Throws DomainError for an unsupported bit depth or an empty fixed range.
GrayImage render(const Image& image, const RenderSpec& spec);
void render_to_file(const Image& image, const RenderSpec& spec, const std::filesystem::path& path);

/// Tiles equally sized gray images on a grid (row 0 at the top); empty cells
/// and the `pad`-pixel gutters take the `background` value.
GrayImage contact_sheet(const std::vector<std::vector<std::optional<GrayImage>>>& cells, int pad,
                        int background);

}  // namespace fosc
