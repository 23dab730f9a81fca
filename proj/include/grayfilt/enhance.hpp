#pragma once

#include "grayfilt/conv.hpp"
#include "grayfilt/core.hpp"

namespace grayfilt {

/// Mean over the (2*radius+1)^2 window, rounded once. radius >= 1.
Image box_blur(const Image& img, int radius = 1, BorderPolicy border = BorderPolicy::replicate);

/// f - box_blur(f), mapped for display. The difference is taken in the signed
/// domain; negative responses vanish in clamp mode.
SignedImage unsharp_residual(const Image& img, int radius = 1,
                             BorderPolicy border = BorderPolicy::replicate);
Image unsharp_mask(const Image& img, int radius = 1, DisplayMode display = DisplayMode::clamp,
                   BorderPolicy border = BorderPolicy::replicate);

/// f - laplacian(f). The Laplacian stencils have a negative center, so the
/// response is subtracted. Clamped once at the end.
SignedImage laplacian_sharpen_signed(const Image& img,
                                     LaplacianVariant variant = LaplacianVariant::four,
                                     BorderPolicy border = BorderPolicy::replicate);
Image laplacian_sharpen(const Image& img, LaplacianVariant variant = LaplacianVariant::four,
                        BorderPolicy border = BorderPolicy::replicate);

}  // namespace grayfilt
