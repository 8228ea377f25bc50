#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "nlmeans/image.hpp"
#include "nlmeans/pgm.hpp"

using nlm::ImageGrid;
using nlm::Parity;
using nlm::PixelCoord;

TEST_CASE("reflect_index pinned examples") {
  CHECK(nlm::reflect_index(3, 8) == 3);
  CHECK(nlm::reflect_index(-1, 8) == 1);
  CHECK(nlm::reflect_index(9, 8) == 5);
  CHECK(nlm::reflect_index(0, 8) == 0);
  CHECK(nlm::reflect_index(7, 8) == 7);
  CHECK(nlm::reflect_index(8, 8) == 6);
  CHECK(nlm::reflect_index(-3, 4) == 3);
}

TEST_CASE("reflect_index matches the fold reference on every usable offset") {
  for (int side : {2, 3, 5, 8, 17, 64}) {
    for (int i = -(side - 1); i <= 2 * (side - 1); ++i) {
      CAPTURE(side);
      CAPTURE(i);
      const int got = nlm::reflect_index(i, side);
      CHECK(got == test::fold_reflect(i, side));
      CHECK(got >= 0);
      CHECK(got < side);
      CHECK(nlm::reflect_index(got, side) == got);  // idempotent once in range
    }
  }
}

TEST_CASE("reflect_index rejects out-of-contract input") {
  CHECK_THROWS_AS(nlm::reflect_index(16, 8), std::invalid_argument);
  CHECK_THROWS_AS(nlm::reflect_index(-16, 8), std::invalid_argument);
  CHECK_THROWS_AS(nlm::reflect_index(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(nlm::reflect_index(0, 0), std::invalid_argument);
}

TEST_CASE("extract_patch is row-major over offsets") {
  ImageGrid img(5);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) img.at(r, c) = 100.0 * r + c;

  const auto patch = nlm::extract_patch(img, {2, 2}, 1);
  REQUIRE(patch.values.size() == 9);
  CHECK(patch.radius == 1);
  const double expected[] = {101, 102, 103, 201, 202, 203, 301, 302, 303};
  for (int i = 0; i < 9; ++i) CHECK(patch.values[i] == expected[i]);
}

TEST_CASE("extract_patch radius 0 and constant images") {
  ImageGrid img(4, 7.25);
  const auto single = nlm::extract_patch(img, {3, 1}, 0);
  REQUIRE(single.values.size() == 1);
  CHECK(single.values[0] == 7.25);

  const auto patch = nlm::extract_patch(img, {0, 0}, 3);
  REQUIRE(patch.values.size() == 49);
  for (double v : patch.values) CHECK(v == 7.25);
}

TEST_CASE("extract_patch mirrors at corners like the fold reference") {
  const ImageGrid img = test::random_image(6, 11);
  for (const PixelCoord center : {PixelCoord{0, 0}, {0, 5}, {5, 0}, {5, 5}, {1, 4}}) {
    for (int radius : {1, 2, 4}) {
      const auto patch = nlm::extract_patch(img, center, radius);
      std::size_t slot = 0;
      for (int dr = -radius; dr <= radius; ++dr) {
        for (int dc = -radius; dc <= radius; ++dc, ++slot) {
          CAPTURE(center.row);
          CAPTURE(center.col);
          CAPTURE(dr);
          CAPTURE(dc);
          CHECK(patch.values[slot] == test::fold_at(img, center.row + dr, center.col + dc));
        }
      }
    }
  }
}

TEST_CASE("extract_patch argument errors") {
  const ImageGrid img(4, 0.0);
  CHECK_THROWS_AS(nlm::extract_patch(img, {4, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(nlm::extract_patch(img, {0, -1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(nlm::extract_patch(img, {0, 0}, -1), std::invalid_argument);
}

TEST_CASE("checkerboard_split pinned examples") {
  CHECK(nlm::checkerboard_split({0, 0}, {0, 0}) == Parity::kPrime);
  CHECK(nlm::checkerboard_split({0, 0}, {1, 0}) == Parity::kDoublePrime);
  CHECK(nlm::checkerboard_split({0, 0}, {0, 1}) == Parity::kDoublePrime);
  CHECK(nlm::checkerboard_split({0, 0}, {1, 1}) == Parity::kPrime);
  CHECK(nlm::checkerboard_split({3, 3}, {2, 2}) == Parity::kPrime);
  CHECK(nlm::checkerboard_split({3, 3}, {2, 4}) == Parity::kPrime);
  CHECK(nlm::checkerboard_split({3, 3}, {4, 4}) == Parity::kPrime);
  CHECK(nlm::checkerboard_split({3, 3}, {3, 2}) == Parity::kDoublePrime);
}

TEST_CASE("checkerboard_split depends only on the offset and partitions windows") {
  for (int dr = -5; dr <= 5; ++dr) {
    for (int dc = -5; dc <= 5; ++dc) {
      const Parity base = nlm::checkerboard_split({0, 0}, {dr, dc});
      CHECK(base == nlm::checkerboard_split({7, 3}, {7 + dr, 3 + dc}));
      const Parity expected = ((dr + dc) % 2 == 0) ? Parity::kPrime : Parity::kDoublePrime;
      CHECK(base == expected);
    }
  }
  // Counts over a radius-2 window: 13 prime slots, 12 double-prime slots.
  int prime = 0, dprime = 0;
  for (int dr = -2; dr <= 2; ++dr)
    for (int dc = -2; dc <= 2; ++dc)
      (nlm::checkerboard_split({9, 9}, {9 + dr, 9 + dc}) == Parity::kPrime ? prime : dprime)++;
  CHECK(prime == 13);
  CHECK(dprime == 12);
}

TEST_CASE("MirrorPad agrees with the fold reference") {
  const ImageGrid img = test::random_image(7, 23);
  for (int pad : {0, 1, 3, 6}) {
    const nlm::MirrorPad padded(img, pad);
    for (int r = -pad; r < 7 + pad; ++r)
      for (int c = -pad; c < 7 + pad; ++c) CHECK(padded.at(r, c) == test::fold_at(img, r, c));
  }
  CHECK_THROWS_AS(nlm::MirrorPad(img, 7), std::invalid_argument);
  CHECK_THROWS_AS(nlm::MirrorPad(img, -1), std::invalid_argument);
}

TEST_CASE("ImageGrid construction validates") {
  CHECK_THROWS_AS(ImageGrid(2, std::vector<double>{1.0, 2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(ImageGrid(2, std::vector<double>{1.0, 2.0, 3.0, std::nan("")}),
                  std::invalid_argument);
  const ImageGrid ok(2, std::vector<double>{1.0, 2.0, 3.0, 4.0});
  CHECK(ok.at(1, 0) == 3.0);
  CHECK(ok.pixel_count() == 4);
}

TEST_CASE("PGM round trip preserves integer images exactly") {
  ImageGrid img = test::random_integer_image(9, 31);
  const std::string bytes = nlm::encode_pgm(img);
  const ImageGrid back = nlm::decode_pgm(bytes);
  REQUIRE(back.side() == 9);
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) CHECK(back.at(r, c) == img.at(r, c));
}

TEST_CASE("PGM encode clamps and rounds half-up") {
  ImageGrid img(2);
  img.at(0, 0) = -5.0;
  img.at(0, 1) = 300.0;
  img.at(1, 0) = 0.5;
  img.at(1, 1) = 254.49;
  const ImageGrid back = nlm::decode_pgm(nlm::encode_pgm(img));
  CHECK(back.at(0, 0) == 0.0);
  CHECK(back.at(0, 1) == 255.0);
  CHECK(back.at(1, 0) == 1.0);
  CHECK(back.at(1, 1) == 254.0);

  ImageGrid half(2);
  half.at(0, 0) = 2.5;
  half.at(0, 1) = 3.5;
  half.at(1, 0) = 254.5;
  half.at(1, 1) = 127.999;
  const ImageGrid hb = nlm::decode_pgm(nlm::encode_pgm(half));
  CHECK(hb.at(0, 0) == 3.0);
  CHECK(hb.at(0, 1) == 4.0);
  CHECK(hb.at(1, 0) == 255.0);
  CHECK(hb.at(1, 1) == 128.0);
}

TEST_CASE("PGM decodes binary and ASCII variants with comments") {
  const std::string p5 = "P5 # binary\n# size next\n2 2\n255\n" + std::string("\x01\x02\x03\x04", 4);
  const ImageGrid a = nlm::decode_pgm(p5);
  CHECK(a.at(0, 0) == 1.0);
  CHECK(a.at(0, 1) == 2.0);
  CHECK(a.at(1, 0) == 3.0);
  CHECK(a.at(1, 1) == 4.0);

  const std::string p2 = "P2\n# ascii twin\n2 2\n255\n1 2\n3 4\n";
  const ImageGrid b = nlm::decode_pgm(p2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(b.at(r, c) == a.at(r, c));
}

TEST_CASE("PGM rejects malformed streams") {
  CHECK_THROWS_AS(nlm::decode_pgm("P6\n2 2\n255\n1234"), nlm::PgmError);       // wrong magic
  CHECK_THROWS_AS(nlm::decode_pgm("P5\n2 3\n255\n123456"), nlm::PgmError);     // not square
  CHECK_THROWS_AS(nlm::decode_pgm("P5\n2 2\n65535\n1234"), nlm::PgmError);     // wide maxval
  CHECK_THROWS_AS(nlm::decode_pgm("P5\n2 2\n255\n123"), nlm::PgmError);        // truncated
  CHECK_THROWS_AS(nlm::decode_pgm("P5\n2 2\n"), nlm::PgmError);                // missing maxval
  CHECK_THROWS_AS(nlm::decode_pgm("P2\n2 2\n255\n1 2 3 999\n"), nlm::PgmError);
  CHECK_THROWS_AS(nlm::decode_pgm(""), nlm::PgmError);
}
