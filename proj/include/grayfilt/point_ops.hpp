#pragma once

#include <array>

#include "grayfilt/core.hpp"

namespace grayfilt {

/// Point transform s = T(r) tabulated over every gray level.
struct Lut {
  std::array<Gray, kLevels> table{};

  static Lut identity();
  /// T(r) = L - 1 - r.
  static Lut negative();
  /// T(r) = 255 * (r / 255)^gamma. gamma > 1 compresses the low end of the
  /// gray scale and expands the high end.
  static Lut power(double gamma);

  bool operator==(const Lut& other) const = default;
};

Image apply_lut(const Image& img, const Lut& lut);

Image negate(const Image& img);

inline constexpr double kDefaultGamma = 2.0;

/// Throws ParameterError unless gamma is finite and positive.
Image gray_stretch(const Image& img, double gamma = kDefaultGamma);

}  // namespace grayfilt
