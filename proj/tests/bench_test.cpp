#include <gtest/gtest.h>

#include <random>

#include "grayfilt/bench.hpp"
#include "test_util.hpp"

namespace grayfilt {
namespace {

// Independent checksum: regenerate the seeded image and sum windows on a
// padded copy with integer arithmetic.
std::uint64_t oracle_checksum(int size, int ksize) {
  std::mt19937 gen(0xC0FFEE);
  std::vector<Gray> px(static_cast<std::size_t>(size) * size);
  for (auto& p : px) p = static_cast<Gray>(gen() % 256);
  const Image img(size, size, px);
  const std::vector<std::vector<double>> ones(ksize, std::vector<double>(ksize, 1.0));
  const auto sums = testing::correlate_oracle(img, ones, false);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    sum += (i + 1) * static_cast<std::uint64_t>(static_cast<std::int64_t>(sums[i]));
  }
  return sum;
}

TEST(Bench, Deterministic) {
  const BenchReport a = bench_convolve(32, 3, 2);
  const BenchReport b = bench_convolve(32, 3, 3);
  EXPECT_EQ(a.checksum, b.checksum);
  EXPECT_EQ(bench_image(16), bench_image(16));
}

TEST(Bench, DegenerateChecksumIsThePixel) {
  const BenchReport r = bench_convolve(1, 1, 1);
  EXPECT_EQ(r.checksum, bench_image(1).at(0, 0));
  std::mt19937 gen(0xC0FFEE);
  EXPECT_EQ(r.checksum, gen() % 256);
}

TEST(Bench, ChecksumMatchesOracle) {
  EXPECT_EQ(bench_convolve(64, 3, 1).checksum, oracle_checksum(64, 3));
  EXPECT_EQ(bench_convolve(20, 5, 1).checksum, oracle_checksum(20, 5));
}

TEST(Bench, ReportFields) {
  const BenchReport r = bench_convolve(16, 3, 5);
  EXPECT_LE(r.min_seconds, r.median_seconds);
  EXPECT_GE(r.mega_ops_per_second, 0.0);
  const std::string text = r.to_text();
  for (const char* key : {"min_ms=", "median_ms=", "mpix_kernel_ops_per_s=", "checksum="}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
  EXPECT_NE(text.find("checksum=" + std::to_string(r.checksum)), std::string::npos);
}

TEST(Bench, RejectsBadParameters) {
  EXPECT_THROW(bench_convolve(0, 3, 1), ParameterError);
  EXPECT_THROW(bench_convolve(8, 4, 1), ParameterError);
  EXPECT_THROW(bench_convolve(8, 3, 0), ParameterError);
  EXPECT_THROW(bench_convolve(8, -1, 1), ParameterError);
}

}  // namespace
}  // namespace grayfilt
