#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "nlmeans/image.hpp"

namespace nlm {

class PgmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Decodes a PGM byte stream.  Accepts binary "P5" and ASCII "P2", requires a
// square raster with maxval 255, tolerates '#' comments between header
// tokens.  Throws PgmError on anything else.
ImageGrid decode_pgm(const std::string& bytes);

// Encodes as binary "P5" with maxval 255.  Intensities are clamped to
// [0, 255] and rounded half-up; this is the only place values are quantized.
std::string encode_pgm(const ImageGrid& img);

ImageGrid read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const ImageGrid& img);

}  // namespace nlm
