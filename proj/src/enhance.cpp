#include "grayfilt/enhance.hpp"

#include <algorithm>
#include <string>

namespace grayfilt {

namespace {

SignedImage subtract(const Image& f, const std::vector<double>& g) {
  std::vector<double> out(f.size());
  std::transform(f.pixels().begin(), f.pixels().end(), g.begin(), out.begin(),
                 [](Gray a, double b) { return static_cast<double>(a) - b; });
  return SignedImage(f.width(), f.height(), std::move(out));
}

}  // namespace

Image box_blur(const Image& img, int radius, BorderPolicy border) {
  if (radius < 1) {
    throw ParameterError("blur radius must be >= 1, got " + std::to_string(radius));
  }
  const int side = 2 * radius + 1;
  const double count = static_cast<double>(side) * side;
  // Integer window sums are exact; the single division is the only rounding.
  const SignedImage sums = correlate(img, Kernel(side, side, std::vector<double>(side * side, 1.0)), border);
  std::vector<Gray> out(sums.size());
  std::transform(sums.values().begin(), sums.values().end(), out.begin(),
                 [count](double s) { return clamp_round(s / count); });
  return Image(img.width(), img.height(), std::move(out));
}

SignedImage unsharp_residual(const Image& img, int radius, BorderPolicy border) {
  const Image blurred = box_blur(img, radius, border);
  return subtract(img, std::vector<double>(blurred.pixels().begin(), blurred.pixels().end()));
}

Image unsharp_mask(const Image& img, int radius, DisplayMode display, BorderPolicy border) {
  return clamp_to_display(unsharp_residual(img, radius, border), display);
}

SignedImage laplacian_sharpen_signed(const Image& img, LaplacianVariant variant,
                                     BorderPolicy border) {
  return subtract(img, laplacian(img, variant, border).values());
}

Image laplacian_sharpen(const Image& img, LaplacianVariant variant, BorderPolicy border) {
  return clamp_to_display(laplacian_sharpen_signed(img, variant, border), DisplayMode::clamp);
}

}  // namespace grayfilt
