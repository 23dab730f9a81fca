#pragma once

#include "grayfilt/core.hpp"

namespace grayfilt {

inline constexpr int kDefaultThreshold = 128;

/// 1 where pixel >= threshold. threshold must lie in [0, 255].
BinaryImage binarize(const Image& img, int threshold = kDefaultThreshold);

/// g(m, n) = 1 iff u(m, n) differs from at least one of its 4-neighbors.
/// Neighbors outside the raster count as equal to the center.
BinaryImage edge_map(const BinaryImage& u);

/// Black pixels with at least one white 4-neighbor: u = 0 and g = 1.
BinaryImage edge_points(const BinaryImage& u);

/// 1 -> 255, 0 -> 0.
Image render_binary(const BinaryImage& b);

/// Pixelwise min(a + b, 255). Throws DomainError if dimensions differ.
Image image_add(const Image& a, const Image& b);

/// 128 + (NE neighbor - SW neighbor), replicate border, clamped. Flat areas
/// become mid-gray; steps facing north-east light up on one side and shade on
/// the other.
Image shadow_ne(const Image& img);

/// negate(shadow_ne(img)).
Image shadow_invert(const Image& img);

/// The difference kernel behind shadow_ne: [[0,0,1],[0,0,0],[-1,0,0]].
Kernel shadow_kernel();

}  // namespace grayfilt
