#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fosc/error.hpp"
#include "fosc/figures.hpp"
#include "fosc/fourier_transforms.hpp"
#include "fosc/image_io.hpp"
#include "fosc/render.hpp"
#include "fosc/verify.hpp"

#ifndef FOSC_SOURCE_DIR
#define FOSC_SOURCE_DIR "."
#endif

using namespace fosc;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("fosc_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Image random_image(ScreenShape shape, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Image img(shape);
  for (auto& v : img.values()) v = {g(rng), g(rng)};
  return img;
}

}  // namespace

TEST_CASE("PGM parsing") {
  const GrayImage a = parse_pgm("P2\n# comment\n3 2\n255\n0 1 2\n3 4 255\n");
  CHECK(a.width == 3);
  CHECK(a.height == 2);
  CHECK(a.at(2, 1) == 255);
  CHECK(a.at(1, 0) == 1);

  const std::string p5 = std::string("P5 2 1 255\n") + char(7) + char(200);
  const GrayImage b = parse_pgm(p5);
  CHECK(b.values == std::vector<int>{7, 200});

  const std::string wide = std::string("P5\n1 1\n65535\n") + char(0x12) + char(0x34);
  CHECK(parse_pgm(wide).values[0] == 0x1234);

  CHECK_THROWS_AS(parse_pgm("P3\n1 1\n255\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_pgm("P2\n0 3\n255\n"), ParseError);
  CHECK_THROWS_AS(parse_pgm("P2\n-1 3\n255\n"), ParseError);
  CHECK_THROWS_AS(parse_pgm("P2\n2 1\n255\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_pgm("P2\n1 1\n100\n101\n"), ParseError);
  CHECK_THROWS_AS(parse_pgm("P5\n2 2\n255\n\x01"), ParseError);
  CHECK_THROWS_AS(parse_pgm("P2\n100000 100000\n255\n"), ParseError);
}

TEST_CASE("PGM writing round trips") {
  GrayImage g{4, 3, 65535, {}};
  for (int i = 0; i < 12; ++i) g.values.push_back(i * 5000);
  for (auto enc : {PgmEncoding::ascii, PgmEncoding::binary}) {
    const GrayImage back = parse_pgm(format_pgm(g, enc));
    CHECK(back.values == g.values);
    CHECK(back.maxval == 65535);
  }
}

TEST_CASE("gray images become screens") {
  GrayImage g{41, 25, 255, std::vector<int>(41 * 25, 0)};
  g.at(40, 0) = 255;  // top right corner
  const Image img = gray_to_image(g);
  CHECK(img.shape() == ScreenShape::from_twice(40, 24));
  CHECK(img(40, 24).real() == 1.0);
  CHECK(img.norm() == 1.0);

  const Image zero = gray_to_image(parse_pgm("P2 3 3 255 0 0 0 0 0 0 0 0 0"));
  CHECK(zero.norm() == 0.0);
  CHECK(zero.shape() == ScreenShape::from_twice(2, 2));

  // even pixel counts give half-integer spins
  CHECK(gray_to_image(GrayImage{4, 2, 255, std::vector<int>(8, 1)}).shape() == ScreenShape::from_twice(3, 1));
}

TEST_CASE("complex array files are bit exact") {
  const Image img = random_image(ScreenShape::from_twice(5, 2), 1);
  const std::string bytes = format_complex_array(img);
  CHECK(bytes.substr(0, 7) == "FKIMG1\n");
  CHECK(bytes.substr(7, 4) == "6 3\n");
  CHECK(bytes.size() == 11 + 18 * 16);
  const Image back = parse_complex_array(bytes);
  CHECK(back.shape() == img.shape());
  for (std::size_t i = 0; i < img.size(); ++i) CHECK(back.values()[i] == img.values()[i]);

  CHECK_THROWS_AS(parse_complex_array(bytes.substr(0, bytes.size() - 1)), ParseError);
  CHECK_THROWS_AS(parse_complex_array("FKIMG1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_complex_array("FKIMG2\n1 1\n"), ParseError);

  const fs::path dir = scratch("io");
  save_complex_array(dir / "a.fkimg", img);
  const Image loaded = load_image(dir / "a.fkimg");
  CHECK(max_abs_diff(loaded, img) == 0.0);
  write_file(dir / "b.pgm", "P2 2 1 255 0 255\n");
  CHECK(load_image(dir / "b.pgm")(1, 0).real() == 1.0);
  CHECK_THROWS_AS(load_image(dir / "missing.pgm"), IoError);
  write_file(dir / "c.txt", "hello");
  CHECK_THROWS_AS(load_image(dir / "c.txt"), ParseError);
}

TEST_CASE("rendering") {
  const CartesianBasis basis(ScreenShape::from_twice(10, 6));
  const GrayImage ground = render(cartesian_mode(basis, {0, 0}), RenderSpec{});
  for (int v : ground.values) CHECK(v > 127);

  Image constant(ScreenShape::from_twice(4, 4));
  for (auto& v : constant.values()) v = 0.3;
  RenderSpec adaptive;
  adaptive.scaling = Scaling::adaptive;
  for (int v : render(constant, adaptive).values) CHECK(v == 128);

  RenderSpec phase;
  phase.channel = Channel::phase;
  const CartesianBasis b117(ScreenShape::from_twice(22, 14));
  const Image lk = lk_mode(b117, 4, 2);
  const GrayImage pg = render(lk, phase);
  for (int ix = 0; ix < 23; ++ix)
    for (int iy = 0; iy < 15; ++iy) {
      const double a = channel_value(lk(ix, iy), Channel::phase);
      CHECK(a >= -pi);
      CHECK(a < pi);
      CHECK(pg.at(ix, 14 - iy) == std::lround((a + pi) / (2 * pi) * 255));
    }

  RenderSpec bad;
  bad.low = 1.0;
  bad.high = 1.0;
  CHECK_THROWS_AS(render(constant, bad), DomainError);
  bad = RenderSpec{};
  bad.bit_depth = 12;
  CHECK_THROWS_AS(render(constant, bad), DomainError);

  RenderSpec deep;
  deep.bit_depth = 16;
  CHECK(render(cartesian_mode(basis, {0, 0}), deep).maxval == 65535);
}

TEST_CASE("contact sheets") {
  const GrayImage cell{2, 3, 255, std::vector<int>(6, 200)};
  const GrayImage sheet = contact_sheet({{cell, std::nullopt}, {std::nullopt, cell}}, 1, 0);
  CHECK(sheet.width == 2 * 3 + 1);
  CHECK(sheet.height == 2 * 4 + 1);
  CHECK(sheet.at(1, 1) == 200);
  CHECK(sheet.at(4, 1) == 0);
  CHECK(sheet.at(4, 5) == 200);
  const GrayImage other{3, 3, 255, std::vector<int>(9, 1)};
  CHECK_THROWS_AS(contact_sheet({{cell, other}}, 1, 0), DimensionError);
}

TEST_CASE("shipped glyph") {
  const Image g = f_glyph();
  CHECK(g.shape() == ScreenShape::from_twice(40, 24));
  const GrayImage pgm = f_glyph_pgm();
  const GrayImage shipped = read_pgm(fs::path(FOSC_SOURCE_DIR) / "data" / "f_glyph_41x25.pgm");
  CHECK(shipped.values == pgm.values);
  CHECK(max_abs_diff(gray_to_image(shipped), g) == 0.0);
  // it has no symmetry that would hide a wrong rotation
  CHECK(max_abs_diff(pixel_inversion(g), g) > 0.5);
}

TEST_CASE("mode galleries") {
  const fs::path dir = scratch("gallery");
  const CartesianBasis basis(ScreenShape::from_twice(10, 6));
  const GalleryReport c = write_cartesian_gallery(basis, dir / "cartesian");
  const GalleryReport l = write_lk_gallery(basis, dir / "lk");
  CHECK(c.modes == 77);
  CHECK(l.modes == 77);
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir / "cartesian")) files += e.path().extension() == ".pgm";
  CHECK(files == 78);
  const GrayImage sheet = read_pgm(dir / "cartesian" / "cartesian_sheet.pgm");
  // 17 rows (n = 0..16) by 17 columns (m = -6..10) of 11 x 7 cells
  CHECK(sheet.width == 17 * (11 + 2) + 2);
  CHECK(sheet.height == 17 * (7 + 2) + 2);
  CHECK(fs::exists(dir / "lk" / "lk_4_m2.pgm"));
  CHECK(fs::exists(dir / "cartesian" / "psi_10_6.pgm"));
}

TEST_CASE("verification suite on small screens") {
  VerifyOptions opt;
  opt.shapes = {ScreenShape::from_twice(4, 2), ScreenShape::from_twice(3, 3)};
  int informational = 0;
  const VerifyReport r = run_verification(opt, [&](const CheckResult& c) { informational += c.informational; });
  CHECK(r.passed());
  CHECK(r.checks.size() > 30);
  CHECK(informational == 2);
}
