#pragma once

#include <string>

#include "grayfilt/core.hpp"

namespace grayfilt {

Histogram compute_histogram(const Image& img);

/// "level,count" header then one "i,bins[i]" line per level; 257 lines.
std::string histogram_csv(const Histogram& h);

inline constexpr int kChartHeight = 100;

/// 256x100 bar chart: white background, one black bar per populated level,
/// height round(100 * bins[i] / max_bin), grown from the bottom row.
Image render_histogram(const Histogram& h);

}  // namespace grayfilt
