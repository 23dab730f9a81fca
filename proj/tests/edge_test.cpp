#include <gtest/gtest.h>

#include <random>

#include "grayfilt/edge.hpp"
#include "grayfilt/point_ops.hpp"
#include "test_util.hpp"

namespace grayfilt {
namespace {

using testing::random_binary;
using testing::random_image;

BinaryImage split4x4() {
  std::vector<std::uint8_t> b;
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) b.push_back(x >= 2);
  return BinaryImage(4, 4, b);
}

BinaryImage dot5x5() {
  std::vector<std::uint8_t> b(25, 0);
  b[12] = 1;
  return BinaryImage(5, 5, b);
}

std::vector<std::uint8_t> columns(int w, int h, std::initializer_list<int> cols) {
  std::vector<std::uint8_t> b(static_cast<std::size_t>(w) * h, 0);
  for (int y = 0; y < h; ++y)
    for (int c : cols) b[static_cast<std::size_t>(y) * w + c] = 1;
  return b;
}

BinaryImage complement(const BinaryImage& u) {
  std::vector<std::uint8_t> b = u.bits();
  for (auto& v : b) v ^= 1;
  return BinaryImage(u.width(), u.height(), b);
}

TEST(Binarize, Threshold) {
  EXPECT_EQ(binarize(Image(3, 3, Gray{0})).bits(), std::vector<std::uint8_t>(9, 0));
  EXPECT_EQ(binarize(Image(2, 1, {128, 127}), 128).bits(), (std::vector<std::uint8_t>{1, 0}));
  std::mt19937 rng(41);
  const Image img = random_image(rng);
  EXPECT_EQ(binarize(img, 0).bits(), std::vector<std::uint8_t>(img.size(), 1));
  EXPECT_THROW(binarize(img, -1), ParameterError);
  EXPECT_THROW(binarize(img, 256), ParameterError);
}

TEST(EdgeMap, AllZero) {
  const BinaryImage u(6, 3, std::vector<std::uint8_t>(18, 0));
  EXPECT_EQ(edge_map(u), u);
  EXPECT_EQ(edge_points(u), u);
}

TEST(EdgeMap, VerticalSplit) {
  EXPECT_EQ(edge_map(split4x4()).bits(), columns(4, 4, {1, 2}));
  EXPECT_EQ(edge_points(split4x4()).bits(), columns(4, 4, {1}));
}

TEST(EdgeMap, SingleDot) {
  std::vector<std::uint8_t> g(25, 0);
  for (int i : {7, 11, 12, 13, 17}) g[i] = 1;
  EXPECT_EQ(edge_map(dot5x5()).bits(), g);
  g[12] = 0;
  EXPECT_EQ(edge_points(dot5x5()).bits(), g);
}

TEST(EdgeMap, NoBorderFrame) {
  const BinaryImage ones(4, 3, std::vector<std::uint8_t>(12, 1));
  EXPECT_EQ(edge_map(ones).bits(), std::vector<std::uint8_t>(12, 0));
}

TEST(EdgeMap, MatchesOracle) {
  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const BinaryImage u = random_binary(rng);
    ASSERT_EQ(edge_map(u).bits(), testing::edge_map_oracle(u));
    ASSERT_EQ(edge_points(u).bits(), testing::edge_points_oracle(u));
  }
}

TEST(EdgeMap, ComplementSymmetricAndPointsSubset) {
  std::mt19937 rng(43);
  for (int i = 0; i < 500; ++i) {
    const BinaryImage u = random_binary(rng);
    ASSERT_EQ(edge_map(u), edge_map(complement(u)));
    const BinaryImage e = edge_points(u);
    for (std::size_t p = 0; p < u.size(); ++p) {
      if (e.bits()[p]) ASSERT_EQ(u.bits()[p], 0);
    }
  }
}

TEST(RenderBinary, ZeroAnd255) {
  EXPECT_EQ(render_binary(BinaryImage(3, 1, {1, 0, 1})).pixels(), (std::vector<Gray>{255, 0, 255}));
}

TEST(ImageAdd, Saturates) {
  EXPECT_EQ(image_add(Image(1, 1, Gray{200}), Image(1, 1, Gray{100})).at(0, 0), 255);
  EXPECT_EQ(image_add(Image(1, 1, Gray{20}), Image(1, 1, Gray{100})).at(0, 0), 120);
}

TEST(ImageAdd, IdentityCommutativeAbsorbing) {
  std::mt19937 rng(44);
  for (int i = 0; i < 300; ++i) {
    const Image a = random_image(rng, 12);
    const Image b = testing::random_image_sized(rng, a.width(), a.height());
    ASSERT_EQ(image_add(a, Image(a.width(), a.height(), Gray{0})), a);
    ASSERT_EQ(image_add(a, b), image_add(b, a));
    const Image full(a.width(), a.height(), Gray{255});
    ASSERT_EQ(image_add(a, full), full);
  }
}

TEST(ImageAdd, EdgeOverlaySaturates) {
  std::mt19937 rng(45);
  for (int i = 0; i < 100; ++i) {
    const Image img = random_image(rng, 16);
    const Image edges = render_binary(edge_points(binarize(img)));
    const Image out = image_add(img, edges);
    for (std::size_t p = 0; p < img.size(); ++p) {
      const int expect = std::min(255, img.pixels()[p] + edges.pixels()[p]);
      ASSERT_EQ(out.pixels()[p], expect);
      if (edges.pixels()[p] == 255) ASSERT_EQ(out.pixels()[p], 255);
    }
  }
}

TEST(ImageAdd, DimensionMismatch) {
  EXPECT_THROW(image_add(Image(2, 2), Image(2, 3)), DomainError);
}

TEST(Shadow, ConstantIsMidGray) {
  EXPECT_EQ(shadow_ne(Image(5, 4, Gray{17})), Image(5, 4, Gray{128}));
  EXPECT_EQ(shadow_invert(Image(5, 4, Gray{17})), Image(5, 4, Gray{127}));
}

TEST(Shadow, ImpulseResponse) {
  const Image img(3, 3, {0, 0, 0, 0, 100, 0, 0, 0, 0});
  const Image out = shadow_ne(img);
  EXPECT_EQ(out.at(0, 2), 228);  // SW neighbor sees the impulse to its NE
  EXPECT_EQ(out.at(2, 0), 28);   // NE neighbor sees it to its SW
  EXPECT_EQ(out.at(1, 1), 128);
  EXPECT_EQ(out.at(0, 0), 128);
  EXPECT_EQ(out.at(2, 2), 128);
}

TEST(Shadow, VerticalStep) {
  // Columns 0-1 dark, 2-3 bright. NE minus SW spans two columns, so both
  // columns bordering the step see +255 and light up; the rest stay flat.
  std::vector<Gray> px;
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) px.push_back(x >= 2 ? 255 : 0);
  const Image step(4, 4, px);
  const Image out = shadow_ne(step);
  const Image inv = shadow_invert(step);
  for (int y = 0; y < 4; ++y) {
    EXPECT_EQ(out.at(0, y), 128);
    EXPECT_EQ(out.at(1, y), 255);
    EXPECT_EQ(out.at(2, y), 255);
    EXPECT_EQ(out.at(3, y), 128);
    EXPECT_EQ(inv.at(1, y), 0);
    EXPECT_EQ(inv.at(2, y), 0);
    EXPECT_EQ(inv.at(0, y), 127);
  }
  // Opposite polarity casts the shadow instead.
  const Image dark = shadow_ne(negate(step));
  for (int y = 0; y < 4; ++y) {
    EXPECT_EQ(dark.at(1, y), 0);
    EXPECT_EQ(dark.at(2, y), 0);
  }
}

TEST(Shadow, InvertIsNegatedShadow) {
  std::mt19937 rng(46);
  for (int i = 0; i < 100; ++i) {
    const Image img = random_image(rng, 16);
    ASSERT_EQ(shadow_invert(img), negate(shadow_ne(img)));
  }
}

}  // namespace
}  // namespace grayfilt
