#include "grayfilt/histogram.hpp"

#include <algorithm>

namespace grayfilt {

Histogram compute_histogram(const Image& img) {
  Histogram h;
  for (Gray p : img.pixels()) ++h.bins[p];
  return h;
}

std::string histogram_csv(const Histogram& h) {
  std::string out = "level,count\n";
  out.reserve(kLevels * 12);
  for (int i = 0; i < kLevels; ++i) {
    out += std::to_string(i);
    out += ',';
    out += std::to_string(h.bins[i]);
    out += '\n';
  }
  return out;
}

Image render_histogram(const Histogram& h) {
  std::vector<Gray> px(static_cast<std::size_t>(kLevels) * kChartHeight, kMaxGray);
  const std::uint64_t max_bin = *std::max_element(h.bins.begin(), h.bins.end());
  if (max_bin == 0) return Image(kLevels, kChartHeight, std::move(px));
  for (int i = 0; i < kLevels; ++i) {
    if (h.bins[i] == 0) continue;
    // round(100 * b / max) in integers; ties go up.
    // Counts are bounded by the pixel count, so 200 * count stays in range.
    const std::uint64_t num = h.bins[i] * kChartHeight;
    const int bar = static_cast<int>((2 * num + max_bin) / (2 * max_bin));
    for (int y = kChartHeight - bar; y < kChartHeight; ++y) {
      px[static_cast<std::size_t>(y) * kLevels + i] = 0;
    }
  }
  return Image(kLevels, kChartHeight, std::move(px));
}

}  // namespace grayfilt
