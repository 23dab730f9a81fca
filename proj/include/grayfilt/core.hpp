#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace grayfilt {

// =============================================================================
// Errors
// =============================================================================

/// Malformed external data (PGM bytes, kernel text, pipeline JSON).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid operation parameter (gamma <= 0, radius < 1, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Value outside the domain of an operation (dimension mismatch, NaN, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// =============================================================================
// Gray levels
// =============================================================================

inline constexpr int kLevels = 256;  // L
inline constexpr int kMaxGray = kLevels - 1;

using Gray = std::uint8_t;

/// Rounds half away from zero, then clamps into [0, 255].
/// Throws DomainError for NaN or infinite input.
Gray clamp_round(double v);

// =============================================================================
// Image types
// =============================================================================

/// 8-bit grayscale raster, row-major, top-left first.
class Image {
 public:
  Image(int width, int height, std::vector<Gray> pixels);
  /// Constant image.
  Image(int width, int height, Gray fill = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  int max_gray() const { return max_gray_; }
  std::size_t size() const { return pixels_.size(); }

  Gray at(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
  const std::vector<Gray>& pixels() const { return pixels_; }

  bool operator==(const Image& other) const = default;

 private:
  int width_;
  int height_;
  int max_gray_ = kMaxGray;
  std::vector<Gray> pixels_;
};

/// Unclamped filter output. Doubles hold every integer-kernel result on 8-bit
/// input exactly (|value| <= 255 * sum|coeffs| is far below 2^53).
class SignedImage {
 public:
  SignedImage(int width, int height, std::vector<double> values);
  SignedImage(int width, int height, double fill = 0.0);
  explicit SignedImage(const Image& img);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }

  double at(int x, int y) const { return values_[static_cast<std::size_t>(y) * width_ + x]; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const SignedImage& other) const = default;

 private:
  int width_;
  int height_;
  std::vector<double> values_;
};

/// Row-major {0, 1} raster.
class BinaryImage {
 public:
  BinaryImage(int width, int height, std::vector<std::uint8_t> bits);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return bits_.size(); }

  bool at(int x, int y) const { return bits_[static_cast<std::size_t>(y) * width_ + x] != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const BinaryImage& other) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

/// Odd-sized real-coefficient kernel anchored at its exact center.
class Kernel {
 public:
  Kernel(int kwidth, int kheight, std::vector<double> coeffs);

  int kwidth() const { return kwidth_; }
  int kheight() const { return kheight_; }
  int anchor_x() const { return kwidth_ / 2; }
  int anchor_y() const { return kheight_ / 2; }

  double at(int col, int row) const { return coeffs_[static_cast<std::size_t>(row) * kwidth_ + col]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  bool operator==(const Kernel& other) const = default;

 private:
  int kwidth_;
  int kheight_;
  std::vector<double> coeffs_;
};

/// 256-bin gray-level occurrence counts.
struct Histogram {
  std::array<std::uint64_t, kLevels> bins{};

  std::uint64_t total() const;
  bool operator==(const Histogram& other) const = default;
};

// =============================================================================
// Execution
// =============================================================================

/// Worker threads used by row-parallel filters. 0 selects
/// std::thread::hardware_concurrency(). Output never depends on this value.
void set_thread_count(unsigned n);
unsigned thread_count();

}  // namespace grayfilt
