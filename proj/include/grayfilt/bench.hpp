#pragma once

#include <cstdint>
#include <string>

#include "grayfilt/core.hpp"

namespace grayfilt {

inline constexpr std::uint32_t kBenchSeed = 0xC0FFEE;

/// size x size pixels drawn from std::mt19937(kBenchSeed), one draw per pixel
/// in row-major order, each reduced mod 256.
Image bench_image(int size);

/// Position-weighted sum: sum_i (i + 1) * int64(round(v_i)), wrapping mod 2^64.
/// A 1x1 image checksums to its single value.
std::uint64_t checksum(const SignedImage& s);

struct BenchReport {
  int size = 0;
  int ksize = 0;
  int iters = 0;
  double min_seconds = 0.0;
  double median_seconds = 0.0;
  /// size^2 * ksize^2 multiply-adds per run, over the median time, in millions.
  double mega_ops_per_second = 0.0;
  std::uint64_t checksum = 0;

  std::string to_text() const;
};

/// Correlates bench_image(size) with a ksize x ksize ones kernel (replicate
/// border) iters times. Throws ParameterError on non-positive or even ksize.
BenchReport bench_convolve(int size, int ksize, int iters);

}  // namespace grayfilt
