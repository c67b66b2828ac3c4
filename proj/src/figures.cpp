#include "fosc/figures.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <optional>

#include "fosc/fourier_transforms.hpp"
#include "fosc/render.hpp"

namespace fosc {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int pad = 2;

using Sheet = std::vector<std::vector<std::optional<GrayImage>>>;

RenderSpec fixed_spec(Channel ch = Channel::real) {
  RenderSpec s;
  s.channel = ch;
  return s;
}

RenderSpec adaptive_spec(Channel ch = Channel::real) {
  RenderSpec s;
  s.channel = ch;
  s.scaling = Scaling::adaptive;
  return s;
}

std::string mode_name(const char* prefix, int a, int b) {
  return std::string(prefix) + "_" + std::to_string(a) + "_" + (b < 0 ? "m" + std::to_string(-b) : std::to_string(b)) + ".pgm";
}

// Up to `count` members of a level, evenly spread, always including both ends.
std::vector<LevelMember> pick_members(const LevelSpectrum& level, std::size_t count) {
  const std::size_t k = level.members.size();
  if (k <= count) return level.members;
  std::vector<LevelMember> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(level.members[i * (k - 1) / (count - 1)]);
  return out;
}

// Renders one level block with a range shared by all its images, so relative
// amplitudes within the block stay comparable.
void append_block(Sheet& sheet, const std::vector<std::vector<Image>>& rows, Channel ch) {
  double peak = 0.0;
  for (const auto& row : rows)
    for (const auto& img : row)
      for (const auto& v : img.values()) peak = std::max(peak, std::abs(channel_value(v, ch)));
  RenderSpec spec = fixed_spec(ch);
  if (peak > 0.0) {
    spec.high = peak;
    spec.low = ch == Channel::abs ? 0.0 : -peak;
  }
  for (const auto& row : rows) {
    std::vector<std::optional<GrayImage>> cells;
    for (const auto& img : row) cells.push_back(render(img, spec));
    sheet.push_back(std::move(cells));
  }
}

ModeCoefficients unit_coeffs(const ScreenShape& shape, ModeIndex idx) {
  ModeCoefficients c(shape);
  c(idx.nx, idx.ny) = 1.0;
  return c;
}

}  // namespace

Image f_glyph() {
  Image img(ScreenShape::from_pixels(41, 25));
  // PGM-style (col, row-from-top) rectangles.
  auto fill = [&](int c0, int c1, int r0, int r1) {
    for (int c = c0; c <= c1; ++c)
      for (int r = r0; r <= r1; ++r) img(c, 24 - r) = 1.0;
  };
  fill(13, 17, 4, 20);  // stem
  fill(13, 29, 4, 7);   // top bar
  fill(13, 25, 11, 13); // middle bar
  return img;
}

GrayImage f_glyph_pgm() {
  RenderSpec s;
  s.low = 0.0;
  s.high = 1.0;
  return render(f_glyph(), s);
}

GalleryReport write_cartesian_gallery(const CartesianBasis& basis, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const ScreenShape& shape = basis.shape();
  const int top = shape.max_total_mode();
  const int m_min = -shape.jy.twice();
  Sheet sheet(top + 1, std::vector<std::optional<GrayImage>>(shape.jx.twice() + shape.jy.twice() + 1));

  GalleryReport report;
  for (const LevelSpectrum& level : basis.levels())
    for (const LevelMember& mem : level.members) {
      const GrayImage g = render(cartesian_mode(basis, mem.mode), fixed_spec());
      const auto path = dir / mode_name("psi", mem.mode.nx, mem.mode.ny);
      write_pgm(path, g);
      report.files.push_back(path);
      ++report.modes;
      sheet[top - level.n][mem.mode.difference() - m_min] = g;
    }
  const auto sheet_path = dir / "cartesian_sheet.pgm";
  write_pgm(sheet_path, contact_sheet(sheet, pad, 0));
  report.files.push_back(sheet_path);
  return report;
}

GalleryReport write_lk_gallery(const CartesianBasis& basis, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  int two_lambda_max = 0;
  for (const auto& level : basis.levels()) two_lambda_max = std::max(two_lambda_max, level.lambda.twice());
  const int top = basis.shape().max_total_mode();
  Sheet sheet(top + 1, std::vector<std::optional<GrayImage>>(2 * two_lambda_max + 1));

  GalleryReport report;
  for (const LevelSpectrum& level : basis.levels())
    for (const LevelMember& mem : level.members) {
      const int m = mem.mu.twice;
      const Image lk = lk_mode(basis, level.n, std::abs(m));
      const GrayImage g = render(lk, fixed_spec(m >= 0 ? Channel::real : Channel::imag));
      const auto path = dir / mode_name("lk", level.n, m);
      write_pgm(path, g);
      report.files.push_back(path);
      ++report.modes;
      sheet[top - level.n][m + two_lambda_max] = g;
    }
  const auto sheet_path = dir / "lk_sheet.pgm";
  write_pgm(sheet_path, contact_sheet(sheet, pad, 0));
  report.files.push_back(sheet_path);
  return report;
}

FiguresReport write_figures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  FiguresReport report;

  {  // Cartesian rhomboid.
    const CartesianBasis basis(ScreenShape::from_twice(10, 6));
    const GalleryReport g = write_cartesian_gallery(basis, dir / "fig1_cartesian");
    FigureSummary f{"cartesian-rhomboid", g.files.back(), g.modes, {}, "shape (5,3), fixed range (-1,1)"};
    for (const auto& level : basis.levels()) f.levels.push_back({level.n, level.lambda, int(level.members.size())});
    report.figures.push_back(std::move(f));
  }

  const CartesianBasis mid(ScreenShape::from_twice(22, 14));
  const int chosen_levels[] = {32, 18, 4};  // top block first, as drawn
  {  // Multiplet rotations.
    const double angles[] = {0.0, 0.25 * pi, 0.5 * pi};
    Sheet sheet;
    FigureSummary f{"multiplet-rotations", dir / "fig2_rotations.pgm", 0, {}, "shape (11,7), theta = 0, pi/4, pi/2; each level block shares a symmetric gray range"};
    for (int n : chosen_levels) {
      const LevelSpectrum& level = mid.level(n);
      const auto members = pick_members(level, 5);
      std::vector<std::vector<Image>> block;
      for (double theta : angles) {
        auto& row = block.emplace_back();
        for (const auto& mem : members) {
          row.push_back(synthesize(mid, rotate_coeffs(mid, unit_coeffs(mid.shape(), mem.mode), theta)));
          ++f.images;
        }
      }
      append_block(sheet, block, Channel::real);
      f.levels.push_back({n, level.lambda, int(members.size())});
    }
    write_pgm(f.file, contact_sheet(sheet, pad, 0));
    report.figures.push_back(std::move(f));
  }

  {  // Glyph rotated in pi/6 steps.
    const CartesianBasis big(ScreenShape::from_twice(40, 24));
    const Image glyph = f_glyph();
    write_pgm(dir / "f_glyph_41x25.pgm", f_glyph_pgm());
    FigureSummary f{"glyph-rotations", dir / "fig3_glyph.pgm", 0, {}, ""};
    Sheet sheet(1);
    ModeCoefficients c = analyze(big, glyph);
    sheet[0].push_back(render(glyph, adaptive_spec()));
    ++f.images;
    for (int step = 1; step <= 6; ++step) {
      c = rotate_coeffs(big, c, pi / 6.0);
      if (step == 1 || step == 2 || step == 3 || step == 6) {
        const Image img = synthesize(big, c);
        double lo = 1e300, hi = -1e300;
        for (const auto& v : img.values()) {
          lo = std::min(lo, v.real());
          hi = std::max(hi, v.real());
        }
        f.note += "step " + std::to_string(step) + ": range (" + std::to_string(lo) + ", " + std::to_string(hi) + ") ";
        sheet[0].push_back(render(img, adaptive_spec()));
        write_pgm(dir / ("fig3_step" + std::to_string(step) + ".pgm"), sheet[0].back().value());
        ++f.images;
      }
    }
    const Image one_shot = rotate(big, glyph, pi);
    report.glyph_six_step_error = max_abs_diff(synthesize(big, c), one_shot);
    write_pgm(f.file, contact_sheet(sheet, pad, 0));
    report.figures.push_back(std::move(f));
  }

  {  // Multiplet gyrations: magnitudes, plus the phase at pi/4.
    const double angles[] = {0.0, pi / 16, pi / 8, 3 * pi / 16, pi / 4};
    Sheet sheet;
    FigureSummary f{"multiplet-gyrations", dir / "fig4_gyrations.pgm", 0, {},
                    "shape (11,7), gamma = 0, pi/16, pi/8, 3pi/16, pi/4; magnitudes share a range per level block; last row of each block is the phase at pi/4"};
    for (int n : chosen_levels) {
      const LevelSpectrum& level = mid.level(n);
      const auto members = pick_members(level, 5);
      std::vector<std::vector<Image>> block;
      for (double gamma : angles) {
        auto& row = block.emplace_back();
        for (const auto& mem : members) {
          row.push_back(synthesize(mid, gyrate_coeffs(mid, unit_coeffs(mid.shape(), mem.mode), gamma)));
          ++f.images;
        }
      }
      append_block(sheet, block, Channel::abs);
      std::vector<std::optional<GrayImage>> phase_row;
      for (const auto& mem : members) {
        const auto c = gyrate_coeffs(mid, unit_coeffs(mid.shape(), mem.mode), pi / 4);
        phase_row.push_back(render(synthesize(mid, c), fixed_spec(Channel::phase)));
        ++f.images;
      }
      sheet.push_back(std::move(phase_row));
      f.levels.push_back({n, level.lambda, int(members.size())});
    }
    write_pgm(f.file, contact_sheet(sheet, pad, 0));
    report.figures.push_back(std::move(f));
  }

  {  // Laguerre-Kravchuk gallery.
    const CartesianBasis basis(ScreenShape::from_twice(10, 6));
    const GalleryReport g = write_lk_gallery(basis, dir / "fig5_lk");
    FigureSummary f{"lk-gallery", g.files.back(), g.modes, {}, "shape (5,3); m >= 0 real part, m < 0 imaginary part"};
    for (const auto& level : basis.levels()) f.levels.push_back({level.n, level.lambda, int(level.members.size())});
    report.figures.push_back(std::move(f));
  }
  return report;
}

}  // namespace fosc
