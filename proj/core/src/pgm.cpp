#include "veinseg/pgm.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "veinseg/error.hpp"

namespace veinseg {

namespace {

constexpr int kMaxMaxval = 65535;
constexpr std::uint64_t kMaxPixels = std::uint64_t{1} << 31;

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_digit(std::uint8_t c) { return c >= '0' && c <= '9'; }

// Sequential reader over a Netpbm byte stream.
class NetpbmReader {
 public:
  explicit NetpbmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  char magic() {
    if (bytes_.size() < 2 || bytes_[0] != 'P') {
      throw FormatError("magic", "not a Netpbm file");
    }
    pos_ = 2;
    return static_cast<char>(bytes_[1]);
  }

  // Skips whitespace and '#' comments, then reads a decimal integer.
  std::uint64_t header_uint(const char* field) {
    skip_space_and_comments();
    return read_uint(field);
  }

  // The single whitespace byte separating maxval from a binary payload.
  void payload_separator() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw FormatError("maxval", "missing whitespace before payload");
    }
    ++pos_;
  }

  std::span<const std::uint8_t> take(std::size_t count) {
    if (bytes_.size() - pos_ < count) {
      throw FormatError("payload", "truncated: expected " + std::to_string(count) +
                                       " bytes, found " +
                                       std::to_string(bytes_.size() - pos_));
    }
    auto out = bytes_.subspan(pos_, count);
    pos_ += count;
    return out;
  }

  // ASCII raster sample.
  std::uint64_t ascii_sample() {
    while (pos_ < bytes_.size() && is_space(bytes_[pos_])) ++pos_;
    if (pos_ >= bytes_.size()) throw FormatError("payload", "truncated ASCII raster");
    return read_uint("payload");
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_uint(const char* field) {
    if (pos_ >= bytes_.size() || !is_digit(bytes_[pos_])) {
      throw FormatError(field, "expected an unsigned integer");
    }
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && is_digit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > kMaxPixels) throw FormatError(field, "value too large");
      ++pos_;
    }
    return value;
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct Header {
  int width = 0;
  int height = 0;
  int maxval = 0;
};

Header read_header(NetpbmReader& reader) {
  Header h;
  const auto w = reader.header_uint("width");
  if (w == 0) throw FormatError("width", "must be positive");
  const auto ht = reader.header_uint("height");
  if (ht == 0) throw FormatError("height", "must be positive");
  if (w * ht > kMaxPixels) throw FormatError("height", "image too large");
  const auto mv = reader.header_uint("maxval");
  if (mv < 1 || mv > kMaxMaxval) {
    throw FormatError("maxval", "must be in [1, 65535], got " + std::to_string(mv));
  }
  h.width = static_cast<int>(w);
  h.height = static_cast<int>(ht);
  h.maxval = static_cast<int>(mv);
  return h;
}

// Reads `count` samples (binary or ASCII) and scales them into [0,1].
std::vector<double> read_samples(NetpbmReader& reader, const Header& h,
                                 std::size_t count, bool binary) {
  std::vector<double> out(count);
  const double scale = static_cast<double>(h.maxval);
  auto check = [&](std::uint64_t v) {
    if (v > static_cast<std::uint64_t>(h.maxval)) {
      throw FormatError("payload", "sample " + std::to_string(v) + " exceeds maxval " +
                                       std::to_string(h.maxval));
    }
    return static_cast<double>(v) / scale;
  };
  if (binary) {
    reader.payload_separator();
    const bool wide = h.maxval > 255;
    auto raw = reader.take(count * (wide ? 2 : 1));
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t v =
          wide ? (std::uint64_t{raw[2 * i]} << 8) | raw[2 * i + 1] : raw[i];
      out[i] = check(v);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) out[i] = check(reader.ascii_sample());
  }
  return out;
}

std::uint32_t quantize(double v, int maxval) {
  const double scaled = std::round(v * static_cast<double>(maxval));
  if (scaled <= 0.0) return 0;
  if (scaled >= maxval) return static_cast<std::uint32_t>(maxval);
  return static_cast<std::uint32_t>(scaled);
}

void append(std::vector<std::uint8_t>& out, const std::string& text) {
  out.insert(out.end(), text.begin(), text.end());
}

}  // namespace

Image load_pgm(std::span<const std::uint8_t> bytes) {
  NetpbmReader reader(bytes);
  const char kind = reader.magic();
  if (kind != '2' && kind != '5') {
    throw FormatError("magic", std::string("expected P2 or P5, got P") + kind);
  }
  const Header h = read_header(reader);
  const std::size_t count = static_cast<std::size_t>(h.width) * h.height;
  return Image(h.width, h.height, read_samples(reader, h, count, kind == '5'));
}

RgbImage load_ppm(std::span<const std::uint8_t> bytes) {
  NetpbmReader reader(bytes);
  const char kind = reader.magic();
  if (kind != '3' && kind != '6') {
    throw FormatError("magic", std::string("expected P3 or P6, got P") + kind);
  }
  const Header h = read_header(reader);
  const std::size_t count = 3 * static_cast<std::size_t>(h.width) * h.height;
  return RgbImage(h.width, h.height, read_samples(reader, h, count, kind == '6'));
}

Image load_grayscale(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '3' || bytes[1] == '6')) {
    return rgb_to_gray(load_ppm(bytes));
  }
  return load_pgm(bytes);
}

std::vector<std::uint8_t> save_pgm(const Image& img, int maxval, bool binary) {
  if (maxval < 1 || maxval > kMaxMaxval) {
    throw DomainError("maxval must be in [1, 65535], got " + std::to_string(maxval));
  }
  for (double v : img.pixels()) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("intensity " + std::to_string(v) +
                        " outside [0,1]; normalize before saving");
    }
  }

  std::vector<std::uint8_t> out;
  append(out, std::string(binary ? "P5" : "P2") + "\n" + std::to_string(img.width()) + " " +
                  std::to_string(img.height()) + "\n" + std::to_string(maxval) + "\n");

  if (binary) {
    const bool wide = maxval > 255;
    out.reserve(out.size() + img.size() * (wide ? 2 : 1));
    for (double v : img.pixels()) {
      const auto q = quantize(v, maxval);
      if (wide) out.push_back(static_cast<std::uint8_t>(q >> 8));
      out.push_back(static_cast<std::uint8_t>(q & 0xFF));
    }
    return out;
  }

  for (int y = 0; y < img.height(); ++y) {
    std::string line;
    for (int x = 0; x < img.width(); ++x) {
      if (x > 0) line += ' ';
      line += std::to_string(quantize(img(x, y), maxval));
    }
    line += '\n';
    append(out, line);
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace veinseg
