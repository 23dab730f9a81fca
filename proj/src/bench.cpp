#include "grayfilt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "grayfilt/conv.hpp"

namespace grayfilt {

Image bench_image(int size) {
  if (size < 1) throw ParameterError("bench: size must be >= 1");
  std::mt19937 gen(kBenchSeed);
  std::vector<Gray> px(static_cast<std::size_t>(size) * size);
  for (auto& p : px) p = static_cast<Gray>(gen() & 0xFFu);
  return Image(size, size, std::move(px));
}

std::uint64_t checksum(const SignedImage& s) {
  std::uint64_t sum = 0;
  std::uint64_t weight = 1;
  for (double v : s.values()) {
    sum += weight++ * static_cast<std::uint64_t>(static_cast<std::int64_t>(std::llround(v)));
  }
  return sum;
}

BenchReport bench_convolve(int size, int ksize, int iters) {
  if (size < 1) throw ParameterError("bench: --size must be >= 1");
  if (ksize < 1 || ksize % 2 == 0) throw ParameterError("bench: --ksize must be odd and >= 1");
  if (iters < 1) throw ParameterError("bench: --iters must be >= 1");

  const Image img = bench_image(size);
  const Kernel ones(ksize, ksize, std::vector<double>(static_cast<std::size_t>(ksize) * ksize, 1.0));

  std::vector<double> times;
  times.reserve(iters);
  SignedImage out(1, 1);
  for (int i = 0; i < iters; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    out = correlate(img, ones, BorderPolicy::replicate);
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());

  BenchReport r;
  r.size = size;
  r.ksize = ksize;
  r.iters = iters;
  r.min_seconds = times.front();
  r.median_seconds = iters % 2 ? times[iters / 2] : 0.5 * (times[iters / 2 - 1] + times[iters / 2]);
  const double ops = static_cast<double>(size) * size * ksize * ksize;
  r.mega_ops_per_second = r.median_seconds > 0.0 ? ops / r.median_seconds / 1e6 : 0.0;
  r.checksum = checksum(out);
  return r;
}

std::string BenchReport::to_text() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "size=%d ksize=%d iters=%d threads=%u\n"
                "min_ms=%.6f\n"
                "median_ms=%.6f\n"
                "mpix_kernel_ops_per_s=%.3f\n"
                "checksum=%llu\n",
                size, ksize, iters, thread_count(), min_seconds * 1e3, median_seconds * 1e3,
                mega_ops_per_second, static_cast<unsigned long long>(checksum));
  return buf;
}

}  // namespace grayfilt
