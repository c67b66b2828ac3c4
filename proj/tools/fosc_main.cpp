// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "angle_expr.hpp"
#include "fosc/fosc.h"

namespace {

enum Exit { ok = 0, usage = 1, data = 2, verification = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(fosc_status s, const std::string& context) {
  if (s == FOSC_OK) return;
  const std::string msg = context + ": " + fosc_last_error();
  if (s == FOSC_ERR_ARGUMENT) throw UsageError(msg);
  throw DataError(msg);
}

struct BasisDel {
  void operator()(fosc_basis* b) const { fosc_basis_destroy(b); }
};
struct ImageDel {
  void operator()(fosc_image* i) const { fosc_image_destroy(i); }
};
using BasisPtr = std::unique_ptr<fosc_basis, BasisDel>;
using ImagePtr = std::unique_ptr<fosc_image, ImageDel>;

double angle(const std::string& text, const char* flag) {
  try {
    return fosc_cli::parse_angle(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

struct Shape {
  int two_jx = 0, two_jy = 0;
};

Shape parse_shape(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--shape expects JX,JY, got \"" + text + "\"");
  Shape s;
  if (fosc_parse_spin(text.substr(0, comma).c_str(), &s.two_jx) != FOSC_OK ||
      fosc_parse_spin(text.substr(comma + 1).c_str(), &s.two_jy) != FOSC_OK)
    throw UsageError(std::string("--shape: ") + fosc_last_error());
  return s;
}

std::string spin_text(int two_j) { return two_j % 2 ? std::to_string(two_j) + "/2" : std::to_string(two_j / 2); }

BasisPtr make_basis(int two_jx, int two_jy) {
  fosc_basis* b = nullptr;
  check(fosc_basis_create(two_jx, two_jy, &b), "basis");
  return BasisPtr(b);
}

ImagePtr load(const std::string& path) {
  fosc_image* img = nullptr;
  check(fosc_image_load(path.c_str(), &img), path);
  return ImagePtr(img);
}

std::string read_text(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw DataError("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fosc_element element(const std::string& arg) {
  fosc_element e{};
  check(fosc_element_from_json(read_text(arg).c_str(), &e), "element");
  return e;
}

std::string json(const fosc_element& e) {
  size_t needed = 0;
  fosc_element_to_json(&e, nullptr, 0, &needed);
  std::string buf(needed, '\0');
  check(fosc_element_to_json(&e, buf.data(), buf.size(), nullptr), "element");
  buf.resize(needed - 1);
  return buf;
}

struct RenderOptions {
  std::string channel = "real";
  std::string scaling = "adaptive";
  std::string range = "-1,1";
  int depth = 8;

  void add_to(CLI::App* app) {
    app->add_option("--channel", channel, "Rendered channel for .pgm output")
        ->check(CLI::IsMember({"real", "imag", "abs", "phase"}))
        ->capture_default_str();
    app->add_option("--scaling", scaling, "Gray-level scaling for .pgm output")
        ->check(CLI::IsMember({"fixed", "adaptive"}))
        ->capture_default_str();
    app->add_option("--range", range, "LOW,HIGH for fixed scaling")->capture_default_str();
    app->add_option("--depth", depth, "PGM bit depth")->check(CLI::IsMember({8, 16}))->capture_default_str();
  }

  fosc_render_spec spec() const {
    fosc_render_spec s{};
    s.channel = channel == "imag" ? FOSC_IMAG : channel == "abs" ? FOSC_ABS : channel == "phase" ? FOSC_PHASE : FOSC_REAL;
    s.scaling = scaling == "fixed" ? FOSC_FIXED : FOSC_ADAPTIVE;
    const auto comma = range.find(',');
    if (comma == std::string::npos) throw UsageError("--range expects LOW,HIGH");
    s.low = angle(range.substr(0, comma), "--range");
    s.high = angle(range.substr(comma + 1), "--range");
    s.bit_depth = depth;
    return s;
  }
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// .pgm paths are rendered, anything else keeps the complex values.
void save(const fosc_image* img, const std::string& path, const RenderOptions& r) {
  if (ends_with(path, ".pgm") || ends_with(path, ".PGM")) {
    const fosc_render_spec s = r.spec();
    check(fosc_image_render(img, &s, path.c_str()), path);
  } else {
    check(fosc_image_save(img, path.c_str()), path);
  }
}

// Shared plumbing of the image-in, image-out subcommands.
struct ImageCommand {
  std::string input, output, shape;
  RenderOptions render;

  void add_to(CLI::App* app) {
    app->add_option("-i,--input", input, "Input image (PGM or complex array file)")->required();
    app->add_option("-o,--output", output, "Output file; .pgm renders, other names store complex values")
        ->required();
    app->add_option("--shape", shape, "Expected JX,JY of the input screen");
    render.add_to(app);
  }

  template <class Op>
  void run(Op&& op) const {
    ImagePtr in = load(input);
    int nx = 0, ny = 0;
    check(fosc_image_size(in.get(), &nx, &ny), input);
    if (!shape.empty()) {
      const Shape s = parse_shape(shape);
      if (s.two_jx != nx - 1 || s.two_jy != ny - 1)
        throw UsageError(input + " is a " + std::to_string(nx) + "x" + std::to_string(ny) +
                         " screen, --shape asks for (" + spin_text(s.two_jx) + "," + spin_text(s.two_jy) + ")");
    }
    BasisPtr basis = make_basis(nx - 1, ny - 1);
    fosc_image* out = nullptr;
    check(op(basis.get(), in.get(), &out), "transform");
    ImagePtr result(out);
    save(result.get(), output, render);
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Finite oscillator transforms of rectangular pixellated images"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fosc_version()));

  // modes
  auto* modes = app.add_subcommand("modes", "Render every Cartesian and Laguerre-Kravchuk mode of a screen");
  std::string modes_shape = "5,3", modes_out = "modes";
  modes->add_option("--shape", modes_shape, "JX,JY spins, e.g. 5,3 or 5/2,3/2")->capture_default_str();
  modes->add_option("-o,--out", modes_out, "Output directory")->capture_default_str();

  // transforms
  ImageCommand rot_cmd, gyr_cmd, four_cmd, apply_cmd;
  std::string theta, gamma, chi = "0", beta = "0", element_arg, form = "gyration";
  auto* rot = app.add_subcommand("rotate", "Rotate an image by theta");
  rot->add_option("--theta", theta, "Angle in radians, e.g. pi/6")->required();
  rot_cmd.add_to(rot);
  auto* gyr = app.add_subcommand("gyrate", "Gyrate an image by gamma");
  gyr->add_option("--gamma", gamma, "Angle in radians")->required();
  gyr_cmd.add_to(gyr);
  auto* four = app.add_subcommand("fourier", "Symmetric (chi) and antisymmetric (beta) Fourier-Kravchuk transforms");
  four->add_option("--chi", chi, "Symmetric angle")->capture_default_str();
  four->add_option("--beta", beta, "Antisymmetric angle")->capture_default_str();
  four_cmd.add_to(four);
  auto* appl = app.add_subcommand("apply", "Apply a Fourier group element D(chi; psi, theta, phi)");
  appl->add_option("--element", element_arg, "JSON object or @file")->required();
  appl->add_option("--form", form, "Euler factorization")
      ->check(CLI::IsMember({"gyration", "rotation"}))
      ->capture_default_str();
  apply_cmd.add_to(appl);

  // render
  auto* rend = app.add_subcommand("render", "Render an image file to PGM");
  std::string rend_in, rend_out;
  RenderOptions rend_opts;
  rend->add_option("-i,--input", rend_in, "Input image")->required();
  rend->add_option("-o,--output", rend_out, "Output PGM")->required();
  rend_opts.add_to(rend);

  // group algebra
  auto* comp = app.add_subcommand("compose", "Compose two elements: prints A o B (B acts first)");
  std::string comp_a, comp_b;
  comp->add_option("A", comp_a, "JSON object or @file")->required();
  comp->add_option("B", comp_b, "JSON object or @file")->required();
  auto* inv = app.add_subcommand("invert", "Inverse of an element");
  std::string inv_a;
  inv->add_option("A", inv_a, "JSON object or @file")->required();
  auto* canon = app.add_subcommand("canonical", "Canonical angles of an element");
  std::string canon_a;
  canon->add_option("A", canon_a, "JSON object or @file")->required();

  // verify
  auto* ver = app.add_subcommand("verify", "Run the invariant suite; exit status 3 on any failure");
  double tolerance = 1e-10;
  std::vector<std::string> ver_shapes;
  unsigned long long seed = 0;
  bool quiet = false;
  ver->add_option("--tolerance", tolerance,
                  "Unitarity and orthonormality tolerance; composition laws use 10x this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--shape", ver_shapes, "Screens to test (repeatable); default 5,3 11,7 20,12");
  ver->add_option("--seed", seed, "Random seed (0 keeps the built-in seed)");
  ver->add_flag("-q,--quiet", quiet, "Only print failures and the summary");

  // figures
  auto* figs = app.add_subcommand("figures", "Regenerate the figure set");
  std::string figs_out = "figures";
  figs->add_option("-o,--out", figs_out, "Output directory")->capture_default_str();

  auto* glyph = app.add_subcommand("glyph", "Write the 41x25 F test glyph");
  std::string glyph_out;
  glyph->add_option("-o,--output", glyph_out, "PGM or complex array output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  if (*modes) {
    const Shape s = parse_shape(modes_shape);
    BasisPtr basis = make_basis(s.two_jx, s.two_jy);
    int nc = 0, nl = 0;
    check(fosc_write_mode_galleries(basis.get(), modes_out.c_str(), &nc, &nl), modes_out);
    std::cout << "shape (" << spin_text(s.two_jx) << "," << spin_text(s.two_jy) << "): " << nc
              << " Cartesian modes -> " << modes_out << "/cartesian, " << nl << " LK modes -> " << modes_out
              << "/lk\n";
    return ok;
  }
  if (*rot) {
    const double t = angle(theta, "--theta");
    rot_cmd.run([&](auto* b, auto* in, auto** out) { return fosc_rotate(b, in, t, out); });
    return ok;
  }
  if (*gyr) {
    const double g = angle(gamma, "--gamma");
    gyr_cmd.run([&](auto* b, auto* in, auto** out) { return fosc_gyrate(b, in, g, out); });
    return ok;
  }
  if (*four) {
    const double c = angle(chi, "--chi"), bt = angle(beta, "--beta");
    four_cmd.run([&](auto* b, auto* in, auto** out) { return fosc_fourier(b, in, c, bt, out); });
    return ok;
  }
  if (*appl) {
    const fosc_element e = element(element_arg);
    const auto f = form == "rotation" ? FOSC_EULER_ROTATION : FOSC_EULER_GYRATION;
    apply_cmd.run([&](auto* b, auto* in, auto** out) { return fosc_apply_element(b, in, &e, f, out); });
    return ok;
  }
  if (*rend) {
    ImagePtr in = load(rend_in);
    const fosc_render_spec s = rend_opts.spec();
    check(fosc_image_render(in.get(), &s, rend_out.c_str()), rend_out);
    return ok;
  }
  if (*comp) {
    const fosc_element a = element(comp_a), b = element(comp_b);
    fosc_element r{};
    check(fosc_element_compose(&a, &b, &r), "compose");
    std::cout << json(r) << "\n";
    return ok;
  }
  if (*inv) {
    const fosc_element a = element(inv_a);
    fosc_element r{};
    check(fosc_element_inverse(&a, &r), "invert");
    std::cout << json(r) << "\n";
    return ok;
  }
  if (*canon) {
    const fosc_element a = element(canon_a);
    fosc_element r{};
    check(fosc_element_canonicalize(&a, &r), "canonical");
    std::cout << json(r) << "\n";
    return ok;
  }
  if (*ver) {
    std::vector<int> two_j;
    for (const auto& s : ver_shapes) {
      const Shape p = parse_shape(s);
      two_j.push_back(p.two_jx);
      two_j.push_back(p.two_jy);
    }
    fosc_verify_options opt{};
    opt.two_j = two_j.empty() ? nullptr : two_j.data();
    opt.shape_count = int(two_j.size() / 2);
    opt.tol_unitary = tolerance;
    opt.tol_composition = 10 * tolerance;
    opt.seed = seed;
    int failures = 0;
    auto print = [](const fosc_check* c, void* user) {
      const bool q = *static_cast<bool*>(user);
      if (q && (c->passed || c->informational)) return;
      std::printf("%-4s %-62s %-8s %.3e (tol %.1e)\n", c->passed ? "PASS" : c->informational ? "INFO" : "FAIL",
                  c->name, c->shape, c->value, c->tolerance);
    };
    check(fosc_verify(&opt, print, &quiet, &failures), "verify");
    std::printf("%s: %d failing check(s)\n", failures ? "FAILED" : "OK", failures);
    return failures ? verification : ok;
  }
  if (*figs) {
    double six = 0.0;
    auto print = [](const fosc_figure_info* f, void*) {
      std::printf("%-20s %4d images  %s\n", f->name, f->images, f->file);
      if (f->level_count <= 3)
        for (int i = 0; i < f->level_count; ++i)
          std::printf("    level n=%d lambda=%s states shown=%d\n", f->level_n[i],
                      spin_text(f->level_two_lambda[i]).c_str(), f->level_shown[i]);
      if (f->note[0]) std::printf("    %s\n", f->note);
    };
    check(fosc_write_figures(figs_out.c_str(), print, nullptr, &six), figs_out);
    std::printf("six pi/6 rotations vs one pi rotation of the glyph: max diff %.3e\n", six);
    return ok;
  }
  if (*glyph) {
    fosc_image* g = nullptr;
    check(fosc_glyph_image(&g), "glyph");
    ImagePtr img(g);
    RenderOptions r;
    r.scaling = "fixed";
    r.range = "0,1";
    save(img.get(), glyph_out, r);
    return ok;
  }
  return usage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return data;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return data;
  }
}
