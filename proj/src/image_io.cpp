#include "fosc/image_io.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "fosc/error.hpp"

namespace fosc {

namespace {

// Upper bound on pixel count accepted from files (~ 4 GiB of complex payload).
constexpr std::uint64_t max_pixels = std::uint64_t(1) << 28;

class HeaderReader {
 public:
  explicit HeaderReader(const std::string& bytes) : s_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t integer(const char* what) {
    skip_space_and_comments();
    if (pos_ >= s_.size()) throw ParseError(std::string("PGM: missing ") + what);
    if (s_[pos_] == '-') throw ParseError(std::string("PGM: negative ") + what);
    if (!std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(std::string("PGM: expected ") + what);
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + std::uint64_t(s_[pos_] - '0');
      if (v > (std::uint64_t(1) << 40)) throw ParseError(std::string("PGM: ") + what + " too large");
      ++pos_;
    }
    return v;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

void put_le_double(std::string& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xffu));
}

double get_le_double(const char* p) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t(static_cast<unsigned char>(p[i])) << (8 * i);
  return std::bit_cast<double>(bits);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read error on '" + path.string() + "'");
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write error on '" + path.string() + "'");
}

GrayImage parse_pgm(const std::string& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
    throw ParseError("not a PGM file (expected P2 or P5 magic)");
  const bool binary = bytes[1] == '5';
  HeaderReader r(bytes);
  r.advance(2);
  const std::uint64_t w = r.integer("width");
  const std::uint64_t h = r.integer("height");
  const std::uint64_t maxval = r.integer("maxval");
  if (w == 0 || h == 0) throw ParseError("PGM: dimensions must be positive");
  if (w * h > max_pixels) throw ParseError("PGM: dimensions too large");
  if (maxval == 0 || maxval > 65535) throw ParseError("PGM: maxval must be in [1, 65535]");

  GrayImage img;
  img.width = int(w);
  img.height = int(h);
  img.maxval = int(maxval);
  img.values.resize(w * h);

  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (r.pos() >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[r.pos()])))
      throw ParseError("PGM: missing raster separator");
    r.advance(1);
    const std::size_t bpp = maxval > 255 ? 2 : 1;
    if (bytes.size() - r.pos() < w * h * bpp) throw ParseError("PGM: truncated raster");
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + r.pos());
    for (std::size_t i = 0; i < w * h; ++i) {
      const int v = bpp == 2 ? (int(p[2 * i]) << 8) | int(p[2 * i + 1]) : int(p[i]);
      if (v > img.maxval) throw ParseError("PGM: sample exceeds maxval");
      img.values[i] = v;
    }
  } else {
    for (std::size_t i = 0; i < w * h; ++i) {
      const std::uint64_t v = r.integer("sample");
      if (v > maxval) throw ParseError("PGM: sample exceeds maxval");
      img.values[i] = int(v);
    }
  }
  return img;
}

GrayImage read_pgm(const std::filesystem::path& path) { return parse_pgm(read_file(path)); }

std::string format_pgm(const GrayImage& img, PgmEncoding encoding) {
  if (img.width <= 0 || img.height <= 0 || img.values.size() != std::size_t(img.width) * img.height)
    throw DimensionError("gray image payload does not match its dimensions");
  if (img.maxval < 1 || img.maxval > 65535) throw DomainError("maxval must be in [1, 65535]");
  std::string out = (encoding == PgmEncoding::binary ? "P5\n" : "P2\n") + std::to_string(img.width) +
                    " " + std::to_string(img.height) + "\n" + std::to_string(img.maxval) + "\n";
  if (encoding == PgmEncoding::binary) {
    for (int v : img.values) {
      if (img.maxval > 255) out.push_back(static_cast<char>((v >> 8) & 0xff));
      out.push_back(static_cast<char>(v & 0xff));
    }
  } else {
    for (int row = 0; row < img.height; ++row) {
      for (int col = 0; col < img.width; ++col) {
        if (col) out.push_back(' ');
        out += std::to_string(img.at(col, row));
      }
      out.push_back('\n');
    }
  }
  return out;
}

void write_pgm(const std::filesystem::path& path, const GrayImage& img, PgmEncoding encoding) {
  write_file(path, format_pgm(img, encoding));
}

Image gray_to_image(const GrayImage& gray) {
  const ScreenShape shape = ScreenShape::from_pixels(gray.width, gray.height);
  Image img(shape);
  for (int row = 0; row < gray.height; ++row)
    for (int col = 0; col < gray.width; ++col)
      img(col, gray.height - 1 - row) = double(gray.at(col, row)) / double(gray.maxval);
  return img;
}

std::string format_complex_array(const Image& img) {
  std::string out(complex_array_magic);
  out += std::to_string(img.shape().nx()) + " " + std::to_string(img.shape().ny()) + "\n";
  out.reserve(out.size() + 16 * img.size());
  for (const auto& v : img.values()) {
    put_le_double(out, v.real());
    put_le_double(out, v.imag());
  }
  return out;
}

Image parse_complex_array(const std::string& bytes) {
  if (bytes.compare(0, complex_array_magic.size(), complex_array_magic) != 0)
    throw ParseError("not a complex array file (bad magic)");
  const std::size_t eol = bytes.find('\n', complex_array_magic.size());
  if (eol == std::string::npos) throw ParseError("complex array: missing dimension line");
  std::istringstream dims(bytes.substr(complex_array_magic.size(), eol - complex_array_magic.size()));
  long long nx = 0, ny = 0;
  std::string rest;
  if (!(dims >> nx >> ny) || (dims >> rest)) throw ParseError("complex array: malformed dimension line");
  if (nx <= 0 || ny <= 0) throw ParseError("complex array: dimensions must be positive");
  if (std::uint64_t(nx) * std::uint64_t(ny) > max_pixels) throw ParseError("complex array: dimensions too large");

  const std::size_t count = std::size_t(nx) * std::size_t(ny);
  if (bytes.size() - (eol + 1) != 16 * count)
    throw ParseError("complex array: payload is " + std::to_string(bytes.size() - eol - 1) +
                     " bytes, expected " + std::to_string(16 * count));
  Image img(ScreenShape::from_pixels(int(nx), int(ny)));
  const char* p = bytes.data() + eol + 1;
  for (std::size_t i = 0; i < count; ++i)
    img.values()[i] = {get_le_double(p + 16 * i), get_le_double(p + 16 * i + 8)};
  return img;
}

void save_complex_array(const std::filesystem::path& path, const Image& img) {
  write_file(path, format_complex_array(img));
}

Image load_complex_array(const std::filesystem::path& path) { return parse_complex_array(read_file(path)); }

Image load_image(const std::filesystem::path& path, ImageFormat format) {
  const std::string bytes = read_file(path);
  if (format == ImageFormat::automatic) {
    if (bytes.compare(0, complex_array_magic.size(), complex_array_magic) == 0)
      format = ImageFormat::complex_array;
    else if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5'))
      format = ImageFormat::pgm;
    else
      throw ParseError("'" + path.string() + "' is neither PGM nor a complex array file");
  }
  return format == ImageFormat::pgm ? gray_to_image(parse_pgm(bytes)) : parse_complex_array(bytes);
}

}  // namespace fosc
