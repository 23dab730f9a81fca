#include "grayfilt/point_ops.hpp"

#include <cmath>
#include <string>

#include "parallel.hpp"

namespace grayfilt {

Lut Lut::identity() {
  Lut lut;
  for (int i = 0; i < kLevels; ++i) lut.table[i] = static_cast<Gray>(i);
  return lut;
}

Lut Lut::negative() {
  Lut lut;
  for (int r = 0; r < kLevels; ++r) lut.table[r] = static_cast<Gray>(kMaxGray - r);
  return lut;
}

Lut Lut::power(double gamma) {
  if (!std::isfinite(gamma) || gamma <= 0.0) {
    throw ParameterError("gamma must be a finite positive number, got " + std::to_string(gamma));
  }
  Lut lut;
  for (int r = 0; r < kLevels; ++r) {
    lut.table[r] = clamp_round(kMaxGray * std::pow(static_cast<double>(r) / kMaxGray, gamma));
  }
  return lut;
}

Image apply_lut(const Image& img, const Lut& lut) {
  std::vector<Gray> out(img.size());
  const auto& in = img.pixels();
  const auto w = static_cast<std::size_t>(img.width());
  detail::for_rows(img.height(), [&](int y0, int y1) {
    for (std::size_t i = y0 * w; i < y1 * w; ++i) out[i] = lut.table[in[i]];
  });
  return Image(img.width(), img.height(), std::move(out));
}

Image negate(const Image& img) {
  // Built from img.max_gray() so the table is literally s = (L - 1) - r.
  Lut lut;
  for (int r = 0; r < kLevels; ++r) lut.table[r] = static_cast<Gray>(img.max_gray() - r);
  return apply_lut(img, lut);
}

Image gray_stretch(const Image& img, double gamma) { return apply_lut(img, Lut::power(gamma)); }

}  // namespace grayfilt
