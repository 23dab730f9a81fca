#include "grayfilt/edge.hpp"

#include <algorithm>
#include <string>

#include "grayfilt/conv.hpp"
#include "grayfilt/point_ops.hpp"
#include "parallel.hpp"

namespace grayfilt {

namespace {
constexpr double kShadowBias = 128.0;
}  // namespace

BinaryImage binarize(const Image& img, int threshold) {
  if (threshold < 0 || threshold > kMaxGray) {
    throw ParameterError("threshold must be in [0, 255], got " + std::to_string(threshold));
  }
  std::vector<std::uint8_t> bits(img.size());
  std::transform(img.pixels().begin(), img.pixels().end(), bits.begin(),
                 [threshold](Gray p) { return static_cast<std::uint8_t>(p >= threshold); });
  return BinaryImage(img.width(), img.height(), std::move(bits));
}

BinaryImage edge_map(const BinaryImage& u) {
  const int w = u.width();
  const int h = u.height();
  std::vector<std::uint8_t> g(u.size());
  detail::for_rows(h, [&](int y0, int y1) {
    for (int y = y0; y < y1; ++y) {
      for (int x = 0; x < w; ++x) {
        const bool c = u.at(x, y);
        bool diff = false;
        if (x > 0) diff |= c != u.at(x - 1, y);
        if (x + 1 < w) diff |= c != u.at(x + 1, y);
        if (y > 0) diff |= c != u.at(x, y - 1);
        if (y + 1 < h) diff |= c != u.at(x, y + 1);
        g[static_cast<std::size_t>(y) * w + x] = diff;
      }
    }
  });
  return BinaryImage(w, h, std::move(g));
}

BinaryImage edge_points(const BinaryImage& u) {
  const BinaryImage g = edge_map(u);
  std::vector<std::uint8_t> out(u.size());
  std::transform(u.bits().begin(), u.bits().end(), g.bits().begin(), out.begin(),
                 [](std::uint8_t ub, std::uint8_t gb) { return static_cast<std::uint8_t>(ub == 0 && gb == 1); });
  return BinaryImage(u.width(), u.height(), std::move(out));
}

Image render_binary(const BinaryImage& b) {
  std::vector<Gray> out(b.size());
  std::transform(b.bits().begin(), b.bits().end(), out.begin(),
                 [](std::uint8_t bit) { return bit ? Gray{kMaxGray} : Gray{0}; });
  return Image(b.width(), b.height(), std::move(out));
}

Image image_add(const Image& a, const Image& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw DomainError("image_add: dimension mismatch " + std::to_string(a.width()) + "x" +
                      std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                      std::to_string(b.height()));
  }
  std::vector<Gray> out(a.size());
  std::transform(a.pixels().begin(), a.pixels().end(), b.pixels().begin(), out.begin(),
                 [](Gray p, Gray q) { return static_cast<Gray>(std::min(p + q, kMaxGray)); });
  return Image(a.width(), a.height(), std::move(out));
}

Kernel shadow_kernel() { return Kernel(3, 3, {0, 0, 1, 0, 0, 0, -1, 0, 0}); }

Image shadow_ne(const Image& img) {
  const SignedImage d = correlate(img, shadow_kernel(), BorderPolicy::replicate);
  std::vector<Gray> out(d.size());
  std::transform(d.values().begin(), d.values().end(), out.begin(),
                 [](double v) { return clamp_round(kShadowBias + v); });
  return Image(img.width(), img.height(), std::move(out));
}

Image shadow_invert(const Image& img) { return negate(shadow_ne(img)); }

}  // namespace grayfilt
