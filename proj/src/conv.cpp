#include "grayfilt/conv.hpp"

#include <algorithm>
#include <string>

#include "parallel.hpp"

namespace grayfilt {

namespace {

template <typename Src>
std::vector<double> correlate_impl(const Src& src, int width, int height, const Kernel& k,
                                   BorderPolicy border) {
  std::vector<double> out(static_cast<std::size_t>(width) * height);
  const int kw = k.kwidth();
  const int kh = k.kheight();
  const int cx = k.anchor_x();
  const int cy = k.anchor_y();
  const auto& coeffs = k.coeffs();

  detail::for_rows(height, [&](int y0, int y1) {
    for (int y = y0; y < y1; ++y) {
      for (int x = 0; x < width; ++x) {
        // Fixed tap order (row-major over the kernel) keeps every output
        // value bit-reproducible.
        double sum = 0.0;
        for (int i = 0; i < kh; ++i) {
          int sy = y + i - cy;
          if (sy < 0 || sy >= height) {
            if (border == BorderPolicy::zero) continue;
            sy = std::clamp(sy, 0, height - 1);
          }
          const std::size_t row = static_cast<std::size_t>(sy) * width;
          for (int j = 0; j < kw; ++j) {
            int sx = x + j - cx;
            if (sx < 0 || sx >= width) {
              if (border == BorderPolicy::zero) continue;
              sx = std::clamp(sx, 0, width - 1);
            }
            sum += coeffs[static_cast<std::size_t>(i) * kw + j] * static_cast<double>(src[row + sx]);
          }
        }
        out[static_cast<std::size_t>(y) * width + x] = sum;
      }
    }
  });
  return out;
}

}  // namespace

Kernel rot180(const Kernel& k) {
  std::vector<double> c(k.coeffs().rbegin(), k.coeffs().rend());
  return Kernel(k.kwidth(), k.kheight(), std::move(c));
}

SignedImage correlate(const Image& img, const Kernel& k, BorderPolicy border) {
  return SignedImage(img.width(), img.height(),
                     correlate_impl(img.pixels(), img.width(), img.height(), k, border));
}

SignedImage correlate(const SignedImage& img, const Kernel& k, BorderPolicy border) {
  return SignedImage(img.width(), img.height(),
                     correlate_impl(img.values(), img.width(), img.height(), k, border));
}

SignedImage convolve(const Image& img, const Kernel& k, BorderPolicy border) {
  return correlate(img, rot180(k), border);
}

Kernel laplacian_kernel(LaplacianVariant variant) {
  if (variant == LaplacianVariant::four) {
    return Kernel(3, 3, {0, 1, 0, 1, -4, 1, 0, 1, 0});
  }
  return Kernel(3, 3, {1, 1, 1, 1, -8, 1, 1, 1, 1});
}

SignedImage laplacian(const Image& img, LaplacianVariant variant, BorderPolicy border) {
  return correlate(img, laplacian_kernel(variant), border);
}

Image clamp_to_display(const SignedImage& s, DisplayMode mode) {
  const auto& v = s.values();
  std::vector<Gray> out(v.size());
  if (mode == DisplayMode::clamp) {
    std::transform(v.begin(), v.end(), out.begin(), clamp_round);
  } else {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double min = *lo;
    const double span = *hi - *lo;
    if (span > 0.0) {
      std::transform(v.begin(), v.end(), out.begin(),
                     [&](double x) { return clamp_round((x - min) * kMaxGray / span); });
    }
  }
  return Image(s.width(), s.height(), std::move(out));
}

BorderPolicy parse_border(std::string_view name) {
  if (name == "replicate") return BorderPolicy::replicate;
  if (name == "zero") return BorderPolicy::zero;
  throw ParameterError("unknown border policy '" + std::string(name) + "' (replicate|zero)");
}

LaplacianVariant parse_variant(std::string_view name) {
  if (name == "four") return LaplacianVariant::four;
  if (name == "eight") return LaplacianVariant::eight;
  throw ParameterError("unknown Laplacian variant '" + std::string(name) + "' (four|eight)");
}

DisplayMode parse_display(std::string_view name) {
  if (name == "clamp") return DisplayMode::clamp;
  if (name == "rescale") return DisplayMode::rescale;
  throw ParameterError("unknown display mode '" + std::string(name) + "' (clamp|rescale)");
}

}  // namespace grayfilt
