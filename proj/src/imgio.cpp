#include "grayfilt/imgio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cerrno>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

namespace grayfilt {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

[[noreturn]] void fail_at(std::size_t offset, const std::string& msg) {
  throw FormatError("PGM: offset " + std::to_string(offset) + ": " + msg);
}

class PgmCursor {
 public:
  PgmCursor(std::string_view bytes, std::size_t pos) : bytes_(bytes), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_space() {
    while (pos_ < bytes_.size() && is_space(bytes_[pos_])) ++pos_;
  }

  // Unsigned decimal terminated by whitespace, '#' (header only) or EOF.
  long read_uint(const char* what, bool allow_comment) {
    const std::size_t start = pos_;
    if (at_end()) fail_at(start, std::string("unexpected end of data reading ") + what);
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000L) fail_at(start, std::string(what) + " is too large");
      ++pos_;
    }
    if (pos_ == start) fail_at(start, std::string("expected a decimal ") + what);
    if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && !(allow_comment && bytes_[pos_] == '#')) {
      fail_at(pos_, std::string("unexpected character in ") + what);
    }
    return value;
  }

  char take() { return bytes_[pos_++]; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::string_view rest() const { return bytes_.substr(pos_); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image read_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    fail_at(0, "bad magic (expected P2 or P5)");
  }
  const bool binary = bytes[1] == '5';
  PgmCursor cur(bytes, 2);
  if (!cur.at_end() && !is_space(bytes[2]) && bytes[2] != '#') fail_at(2, "bad magic (expected P2 or P5)");

  long dims[3];
  const char* names[3] = {"width", "height", "maxval"};
  for (int i = 0; i < 3; ++i) {
    cur.skip_space_and_comments();
    if (cur.at_end()) fail_at(cur.pos(), std::string("truncated header reading ") + names[i]);
    dims[i] = cur.read_uint(names[i], true);
  }
  const long width = dims[0];
  const long height = dims[1];
  if (width < 1 || height < 1) fail_at((cur.pos()), "dimensions must be >= 1");
  if (dims[2] != kMaxGray) fail_at((cur.pos()), "maxval must be 255, got " + std::to_string(dims[2]));

  const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<Gray> px;

  if (binary) {
    if (cur.at_end()) fail_at((cur.pos()), "truncated: missing whitespace before raster");
    cur.take();  // the single separator byte (guaranteed whitespace by read_uint)
    if (cur.remaining() < count) {
      fail_at(cur.pos() + cur.remaining(),
              "truncated raster: expected " + std::to_string(count) + " bytes, got " +
                  std::to_string(cur.remaining()));
    }
    const std::string_view raster = cur.rest().substr(0, count);
    px.assign(raster.begin(), raster.end());
  } else {
    px.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      cur.skip_space();
      if (cur.at_end()) {
        fail_at((cur.pos()), "truncated raster: expected " + std::to_string(count) +
                                   " values, got " + std::to_string(i));
      }
      const std::size_t start = cur.pos();
      long v = 0;
      try {
        v = cur.read_uint("pixel value", false);
      } catch (const FormatError&) {
        fail_at((start), "non-numeric pixel value");
      }
      if (v > kMaxGray) fail_at((start), "pixel value " + std::to_string(v) + " exceeds maxval");
      px.push_back(static_cast<Gray>(v));
    }
    cur.skip_space();
    if (!cur.at_end()) fail_at((cur.pos()), "trailing data after raster");
  }
  return Image(static_cast<int>(width), static_cast<int>(height), std::move(px));
}

std::string write_pgm(const Image& img, PgmFormat format) {
  std::string out;
  out += format == PgmFormat::p5 ? "P5\n" : "P2\n";
  out += std::to_string(img.width()) + ' ' + std::to_string(img.height()) + '\n';
  out += std::to_string(img.max_gray()) + '\n';
  if (format == PgmFormat::p5) {
    out.append(img.pixels().begin(), img.pixels().end());
    return out;
  }
  out.reserve(out.size() + img.size() * 4);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (x > 0) out += ' ';
      out += std::to_string(img.at(x, y));
    }
    out += '\n';
  }
  return out;
}

Kernel parse_kernel(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  auto fail = [](std::size_t line, const std::string& msg) -> void {
    throw FormatError("kernel: line " + std::to_string(line) + ": " + msg);
  };
  auto tokens = [](std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      const std::size_t s = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      if (i > s) out.push_back(line.substr(s, i - s));
    }
    return out;
  };
  auto to_double = [&](std::string_view tok, std::size_t line) {
    double v = 0.0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
      fail(line, "non-numeric token '" + std::string(tok) + "'");
    }
    return v;
  };

  // Trailing blank lines are tolerated.
  while (!lines.empty() && tokens(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) fail(1, "missing \"kheight kwidth\" header");

  const auto header = tokens(lines[0]);
  if (header.size() != 2) fail(1, "expected \"kheight kwidth\"");
  int dims[2];
  for (int i = 0; i < 2; ++i) {
    const auto [ptr, ec] = std::from_chars(header[i].data(), header[i].data() + header[i].size(), dims[i]);
    if (ec != std::errc{} || ptr != header[i].data() + header[i].size()) {
      fail(1, "non-numeric dimension '" + std::string(header[i]) + "'");
    }
  }
  const int kh = dims[0];
  const int kw = dims[1];
  if (kh < 1 || kw < 1 || kh % 2 == 0 || kw % 2 == 0) {
    fail(1, "dimensions must be odd and positive, got " + std::to_string(kh) + " " + std::to_string(kw));
  }
  if (lines.size() - 1 != static_cast<std::size_t>(kh)) {
    fail(lines.size() < static_cast<std::size_t>(kh) + 1 ? lines.size() + 1 : static_cast<std::size_t>(kh) + 2,
         "expected " + std::to_string(kh) + " coefficient rows, got " + std::to_string(lines.size() - 1));
  }
  std::vector<double> coeffs;
  coeffs.reserve(static_cast<std::size_t>(kh) * kw);
  for (int r = 0; r < kh; ++r) {
    const std::size_t line_no = static_cast<std::size_t>(r) + 2;
    const auto row = tokens(lines[r + 1]);
    if (row.size() != static_cast<std::size_t>(kw)) {
      fail(line_no, "expected " + std::to_string(kw) + " values, got " + std::to_string(row.size()));
    }
    for (auto tok : row) coeffs.push_back(to_double(tok, line_no));
  }
  if (std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return c == 0.0; })) {
    fail(2, "all coefficients are zero");
  }
  return Kernel(kw, kh, std::move(coeffs));
}

PgmFormat parse_pgm_format(std::string_view name) {
  if (name == "p5" || name == "P5") return PgmFormat::p5;
  if (name == "p2" || name == "P2") return PgmFormat::p2;
  throw ParameterError("unknown PGM format '" + std::string(name) + "' (p2|p5)");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::system_error(errno, std::generic_category(), "cannot read " + path.string());
  return std::move(ss).str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view data) {
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::system_error(errno, std::generic_category(), "cannot create " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw std::system_error(ec, "cannot rename onto " + path.string());
  }
}

Image load_pgm(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

void save_pgm(const std::filesystem::path& path, const Image& img, PgmFormat format) {
  write_file_atomic(path, write_pgm(img, format));
}

}  // namespace grayfilt
