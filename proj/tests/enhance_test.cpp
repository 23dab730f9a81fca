#include <gtest/gtest.h>

#include <random>

#include "grayfilt/enhance.hpp"
#include "test_util.hpp"

namespace grayfilt {
namespace {

using testing::random_image;

TEST(BoxBlur, ConstantUnchanged) {
  const Image flat(6, 4, Gray{91});
  for (int r : {1, 2, 5}) {
    EXPECT_EQ(box_blur(flat, r), flat);
    EXPECT_EQ(box_blur(flat, r, BorderPolicy::replicate), flat);
  }
}

TEST(BoxBlur, ImpulseZeroBorder) {
  const Image img(3, 3, {0, 0, 0, 0, 9, 0, 0, 0, 0});
  EXPECT_EQ(box_blur(img, 1, BorderPolicy::zero), Image(3, 3, Gray{1}));
}

TEST(BoxBlur, MatchesWindowedMeanOracle) {
  std::mt19937 rng(31);
  const Image img = testing::random_image_sized(rng, 8, 8);
  EXPECT_EQ(box_blur(img, 1).pixels(), testing::box_mean_oracle(img, 1, false));
  for (int i = 0; i < 200; ++i) {
    const Image r = random_image(rng, 14);
    const int radius = 1 + i % 3;
    ASSERT_EQ(box_blur(r, radius, BorderPolicy::replicate).pixels(), testing::box_mean_oracle(r, radius, false));
    ASSERT_EQ(box_blur(r, radius, BorderPolicy::zero).pixels(), testing::box_mean_oracle(r, radius, true));
  }
}

TEST(BoxBlur, RejectsBadRadius) {
  EXPECT_THROW(box_blur(Image(2, 2), 0), ParameterError);
  EXPECT_THROW(box_blur(Image(2, 2), -3), ParameterError);
  EXPECT_THROW(unsharp_mask(Image(2, 2), 0), ParameterError);
}

TEST(UnsharpMask, ConstantGivesZero) {
  EXPECT_EQ(unsharp_mask(Image(5, 5, Gray{200})), Image(5, 5, Gray{0}));
}

TEST(UnsharpMask, WorkedExample) {
  // Replicate means are (85, 85, 85); residual (-85, 170, -85).
  const Image img(3, 1, {0, 255, 0});
  EXPECT_EQ(unsharp_residual(img, 1).values(), (std::vector<double>{-85, 170, -85}));
  EXPECT_EQ(unsharp_mask(img, 1, DisplayMode::clamp, BorderPolicy::replicate).pixels(),
            (std::vector<Gray>{0, 170, 0}));
  EXPECT_EQ(unsharp_mask(img, 1, DisplayMode::rescale).pixels(), (std::vector<Gray>{0, 255, 0}));
}

TEST(UnsharpMask, ZeroWhereNotAboveBlur) {
  std::mt19937 rng(32);
  for (int i = 0; i < 100; ++i) {
    const Image img = random_image(rng, 12);
    const Image blur = box_blur(img, 1);
    const Image out = unsharp_mask(img, 1);
    for (std::size_t p = 0; p < img.size(); ++p) {
      if (img.pixels()[p] <= blur.pixels()[p]) ASSERT_EQ(out.pixels()[p], 0);
      else ASSERT_EQ(out.pixels()[p], img.pixels()[p] - blur.pixels()[p]);
    }
  }
}

TEST(LaplacianSharpen, ConstantUnchanged) {
  const Image flat(4, 6, Gray{77});
  EXPECT_EQ(laplacian_sharpen(flat, LaplacianVariant::four), flat);
  EXPECT_EQ(laplacian_sharpen(flat, LaplacianVariant::eight), flat);
}

TEST(LaplacianSharpen, Impulse) {
  std::vector<Gray> px(25, 0);
  px[12] = 100;
  const Image out = laplacian_sharpen(Image(5, 5, px), LaplacianVariant::four);
  EXPECT_EQ(out.at(2, 2), 255);  // 100 - (-400)
  EXPECT_EQ(out.at(1, 2), 0);    // 0 - 100
  EXPECT_EQ(out.at(3, 2), 0);
  EXPECT_EQ(out.at(2, 1), 0);
  EXPECT_EQ(out.at(2, 3), 0);
  const SignedImage s = laplacian_sharpen_signed(Image(5, 5, px), LaplacianVariant::four);
  EXPECT_EQ(s.at(2, 2), 500);
  EXPECT_EQ(s.at(1, 2), -100);
}

TEST(LaplacianSharpen, LinearRampInteriorUnchanged) {
  std::vector<Gray> px;
  for (int y = 0; y < 6; ++y)
    for (int x = 0; x < 9; ++x) px.push_back(static_cast<Gray>(x * 20));
  const Image ramp(9, 6, px);
  const Image out = laplacian_sharpen(ramp, LaplacianVariant::four);
  for (int y = 1; y < 5; ++y)
    for (int x = 1; x < 8; ++x) EXPECT_EQ(out.at(x, y), ramp.at(x, y));
}

TEST(LaplacianSharpen, CompositeKernelIdentity) {
  const Kernel composite(3, 3, {0, -1, 0, -1, 5, -1, 0, -1, 0});
  std::mt19937 rng(33);
  for (int i = 0; i < 300; ++i) {
    const Image img = random_image(rng, 16);
    ASSERT_EQ(laplacian_sharpen_signed(img, LaplacianVariant::four), correlate(img, composite));
  }
}

}  // namespace
}  // namespace grayfilt
