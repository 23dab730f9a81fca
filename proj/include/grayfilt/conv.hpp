#pragma once

#include <string_view>

#include "grayfilt/core.hpp"

namespace grayfilt {

/// How taps falling outside the image are resolved.
enum class BorderPolicy {
  replicate,  // nearest in-range pixel
  zero,       // 0
};

enum class LaplacianVariant { four, eight };

/// Mapping of a SignedImage back to displayable gray levels.
enum class DisplayMode {
  clamp,    // clamp_round each value
  rescale,  // affine [min, max] -> [0, 255], then round
};

/// Coefficient (i, j) becomes (kheight-1-i, kwidth-1-j).
Kernel rot180(const Kernel& k);

/// Same-size sliding-window sum with the kernel anchored at its center:
///   out(x, y) = sum_{i,j} k(i, j) * in(x + j - cx, y + i - cy)
SignedImage correlate(const Image& img, const Kernel& k,
                      BorderPolicy border = BorderPolicy::replicate);
SignedImage correlate(const SignedImage& img, const Kernel& k,
                      BorderPolicy border = BorderPolicy::replicate);

/// Correlation with the kernel rotated by 180 degrees.
SignedImage convolve(const Image& img, const Kernel& k,
                     BorderPolicy border = BorderPolicy::replicate);

/// four:  [[0,1,0],[1,-4,1],[0,1,0]]
/// eight: [[1,1,1],[1,-8,1],[1,1,1]]
Kernel laplacian_kernel(LaplacianVariant variant);

SignedImage laplacian(const Image& img, LaplacianVariant variant = LaplacianVariant::four,
                      BorderPolicy border = BorderPolicy::replicate);

/// In rescale mode a constant input (max == min) maps to all zeros.
Image clamp_to_display(const SignedImage& s, DisplayMode mode = DisplayMode::clamp);

// Name parsing shared by the CLI and the pipeline loader. Throw ParameterError.
BorderPolicy parse_border(std::string_view name);
LaplacianVariant parse_variant(std::string_view name);
DisplayMode parse_display(std::string_view name);

}  // namespace grayfilt
