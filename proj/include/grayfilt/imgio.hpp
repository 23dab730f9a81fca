#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "grayfilt/core.hpp"

namespace grayfilt {

enum class PgmFormat { p2, p5 };

/// Parses an ASCII (P2) or binary (P5) PGM with maxval 255. Comment lines are
/// accepted in the header. Errors throw FormatError citing the byte offset.
Image read_pgm(std::string_view bytes);

/// Canonical emission: magic, "width height", "255", then data. P2 writes
/// one image row per line.
std::string write_pgm(const Image& img, PgmFormat format = PgmFormat::p5);

/// Kernel text: "kheight kwidth" on the first line, then kheight lines of
/// kwidth reals. Errors throw FormatError naming the line.
Kernel parse_kernel(std::string_view text);

PgmFormat parse_pgm_format(std::string_view name);

// File helpers. I/O failures throw std::system_error.
std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary then renames it over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

Image load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const Image& img,
              PgmFormat format = PgmFormat::p5);

}  // namespace grayfilt
