#pragma once

#include <functional>

namespace grayfilt::detail {

// Splits [0, rows) into contiguous blocks and runs fn(begin, end) on each,
// one block per worker. Every row is written by exactly one call, so results
// are independent of the worker count.
void for_rows(int rows, const std::function<void(int, int)>& fn);

}  // namespace grayfilt::detail
