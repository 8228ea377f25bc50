#include "nlmeans/pgm.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace nlm {
namespace {

bool is_pnm_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Advances past whitespace and '#' comments (which run to end of line).
void skip_separators(const std::string& s, std::size_t& pos) {
  while (pos < s.size()) {
    if (is_pnm_space(s[pos])) {
      ++pos;
    } else if (s[pos] == '#') {
      while (pos < s.size() && s[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

int parse_header_int(const std::string& s, std::size_t& pos, const char* what) {
  skip_separators(s, pos);
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
    throw PgmError(std::string("malformed PGM header: missing ") + what);
  }
  long value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + (s[pos] - '0');
    if (value > 1'000'000'000L) throw PgmError("PGM header value out of range");
    ++pos;
  }
  return static_cast<int>(value);
}

}  // namespace

ImageGrid decode_pgm(const std::string& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw PgmError("not a PGM stream (expected P5 or P2 magic)");
  }
  const bool binary = bytes[1] == '5';
  std::size_t pos = 2;

  const int width = parse_header_int(bytes, pos, "width");
  const int height = parse_header_int(bytes, pos, "height");
  const int maxval = parse_header_int(bytes, pos, "maxval");
  if (width != height) {
    throw PgmError("only square images are supported, got " + std::to_string(width) + "x" +
                   std::to_string(height));
  }
  if (width <= 0) throw PgmError("image dimensions must be positive");
  if (maxval != 255) throw PgmError("only maxval 255 is supported, got " + std::to_string(maxval));

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<double> values;
  values.reserve(count);

  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (pos >= bytes.size() || !is_pnm_space(bytes[pos])) {
      throw PgmError("malformed PGM header: missing raster separator");
    }
    ++pos;
    if (bytes.size() - pos < count) throw PgmError("truncated PGM raster");
    for (std::size_t i = 0; i < count; ++i) {
      values.push_back(static_cast<double>(static_cast<std::uint8_t>(bytes[pos + i])));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const int v = parse_header_int(bytes, pos, "pixel value");
      if (v > maxval) throw PgmError("pixel value exceeds maxval");
      values.push_back(static_cast<double>(v));
    }
  }
  return ImageGrid(width, std::move(values));
}

std::string encode_pgm(const ImageGrid& img) {
  if (img.empty()) throw PgmError("cannot encode an empty image");
  const int n = img.side();
  std::string out = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  out.reserve(out.size() + img.pixel_count());
  for (int r = 0; r < n; ++r) {
    const double* row = img.row_ptr(r);
    for (int c = 0; c < n; ++c) {
      double v = row[c];
      if (v <= 0.0) {
        out.push_back('\0');
      } else if (v >= 255.0) {
        out.push_back(static_cast<char>(255));
      } else {
        out.push_back(static_cast<char>(static_cast<int>(std::floor(v + 0.5))));
      }
    }
  }
  return out;
}

ImageGrid read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PgmError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_pgm(buf.str());
}

void write_pgm_file(const std::filesystem::path& path, const ImageGrid& img) {
  const std::string bytes = encode_pgm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw PgmError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw PgmError("failed writing " + path.string());
}

}  // namespace nlm
