#include "grayfilt/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace grayfilt {

namespace {

void check_dims(int width, int height, std::size_t n, const char* what) {
  if (width < 1 || height < 1) {
    throw DomainError(std::string(what) + ": dimensions must be positive, got " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
  if (n != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw DomainError(std::string(what) + ": expected " + std::to_string(width) + "x" +
                      std::to_string(height) + " values, got " + std::to_string(n));
  }
}

}  // namespace

Gray clamp_round(double v) {
  if (!std::isfinite(v)) {
    throw DomainError("clamp_round: non-finite value");
  }
  const double r = std::round(v);  // half away from zero
  if (r <= 0.0) return 0;
  if (r >= kMaxGray) return kMaxGray;
  return static_cast<Gray>(r);
}

Image::Image(int width, int height, std::vector<Gray> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width_, height_, pixels_.size(), "Image");
}

Image::Image(int width, int height, Gray fill)
    : Image(width, height,
            std::vector<Gray>(width > 0 && height > 0 ? static_cast<std::size_t>(width) * height : 0,
                              fill)) {}

SignedImage::SignedImage(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  check_dims(width_, height_, values_.size(), "SignedImage");
}

SignedImage::SignedImage(int width, int height, double fill)
    : SignedImage(width, height,
                  std::vector<double>(
                      width > 0 && height > 0 ? static_cast<std::size_t>(width) * height : 0, fill)) {}

SignedImage::SignedImage(const Image& img)
    : width_(img.width()),
      height_(img.height()),
      values_(img.pixels().begin(), img.pixels().end()) {}

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  check_dims(width_, height_, bits_.size(), "BinaryImage");
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw DomainError("BinaryImage: every element must be 0 or 1");
  }
}

Kernel::Kernel(int kwidth, int kheight, std::vector<double> coeffs)
    : kwidth_(kwidth), kheight_(kheight), coeffs_(std::move(coeffs)) {
  if (kwidth_ < 1 || kheight_ < 1 || kwidth_ % 2 == 0 || kheight_ % 2 == 0) {
    throw DomainError("Kernel: dimensions must be odd and positive, got " +
                      std::to_string(kheight_) + "x" + std::to_string(kwidth_));
  }
  if (coeffs_.size() != static_cast<std::size_t>(kwidth_) * kheight_) {
    throw DomainError("Kernel: coefficient count does not match dimensions");
  }
  if (std::any_of(coeffs_.begin(), coeffs_.end(), [](double c) { return !std::isfinite(c); })) {
    throw DomainError("Kernel: coefficients must be finite");
  }
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; })) {
    throw DomainError("Kernel: at least one coefficient must be nonzero");
  }
}

std::uint64_t Histogram::total() const {
  return std::accumulate(bins.begin(), bins.end(), std::uint64_t{0});
}

}  // namespace grayfilt
