#include "fosc/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fosc/error.hpp"

namespace fosc {

double channel_value(std::complex<double> v, Channel channel) {
  switch (channel) {
    case Channel::real: return v.real();
    case Channel::imag: return v.imag();
    case Channel::abs: return std::abs(v);
    case Channel::phase: {
      double a = std::arg(v);  // (-pi, pi]
      if (a >= std::numbers::pi) a -= 2.0 * std::numbers::pi;
      return a;
    }
  }
  return 0.0;
}

GrayImage render(const Image& image, const RenderSpec& spec) {
  if (spec.bit_depth != 8 && spec.bit_depth != 16) throw DomainError("bit depth must be 8 or 16");
  const int maxval = spec.maxval();
  const int nx = image.shape().nx();
  const int ny = image.shape().ny();

  std::vector<double> vals(image.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = channel_value(image.values()[i], spec.channel);

  double lo = spec.low, hi = spec.high;
  bool degenerate = false;
  if (spec.channel == Channel::phase) {
    lo = -std::numbers::pi;
    hi = std::numbers::pi;
  } else if (spec.scaling == Scaling::adaptive) {
    const auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
    lo = *mn;
    hi = *mx;
    degenerate = !(hi - lo > 1e-14 * std::max(1.0, std::max(std::abs(lo), std::abs(hi))));
  } else if (!(hi > lo)) {
    throw DomainError("fixed render range must have high > low");
  }

  GrayImage out;
  out.width = nx;
  out.height = ny;
  out.maxval = maxval;
  out.values.resize(image.size());
  for (int ix = 0; ix < nx; ++ix)
    for (int iy = 0; iy < ny; ++iy) {
      int g = (maxval + 1) / 2;
      if (!degenerate) {
        const double t = (vals[std::size_t(ix) * ny + iy] - lo) / (hi - lo);
        g = static_cast<int>(std::lround(std::clamp(t, 0.0, 1.0) * maxval));
      }
      out.at(ix, ny - 1 - iy) = g;
    }
  return out;
}

void render_to_file(const Image& image, const RenderSpec& spec, const std::filesystem::path& path) {
  write_pgm(path, render(image, spec));
}

GrayImage contact_sheet(const std::vector<std::vector<std::optional<GrayImage>>>& cells, int pad,
                        int background) {
  int cw = 0, ch = 0, maxval = 255;
  std::size_t cols = 0;
  for (const auto& row : cells) {
    cols = std::max(cols, row.size());
    for (const auto& c : row)
      if (c) {
        if (cw && (c->width != cw || c->height != ch)) throw DimensionError("contact sheet cells differ in size");
        cw = c->width;
        ch = c->height;
        maxval = c->maxval;
      }
  }
  if (!cw) throw DimensionError("contact sheet has no cells");

  GrayImage sheet;
  sheet.maxval = maxval;
  sheet.width = int(cols) * (cw + pad) + pad;
  sheet.height = int(cells.size()) * (ch + pad) + pad;
  sheet.values.assign(std::size_t(sheet.width) * sheet.height, std::clamp(background, 0, maxval));
  for (std::size_t r = 0; r < cells.size(); ++r)
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (!cells[r][c]) continue;
      const int x0 = pad + int(c) * (cw + pad);
      const int y0 = pad + int(r) * (ch + pad);
      for (int y = 0; y < ch; ++y)
        for (int x = 0; x < cw; ++x) sheet.at(x0 + x, y0 + y) = cells[r][c]->at(x, y);
    }
  return sheet;
}

}  // namespace fosc
