// grayfilt: command-line front end for the spatial-domain filters.
//
// Images are read and written as PGM. Diagnostics go to stderr; results only
// ever go to files, written atomically.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or format error, 3 domain error.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <system_error>

#include <CLI11.hpp>

#include "grayfilt/bench.hpp"
#include "grayfilt/conv.hpp"
#include "grayfilt/core.hpp"
#include "grayfilt/edge.hpp"
#include "grayfilt/enhance.hpp"
#include "grayfilt/histogram.hpp"
#include "grayfilt/imgio.hpp"
#include "grayfilt/pipeline.hpp"
#include "grayfilt/point_ops.hpp"

namespace {

using namespace grayfilt;

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kDomain = 3 };

struct Common {
  std::string input;
  std::string output;
  std::string format = "p5";
};

void add_io(CLI::App* cmd, Common& c) {
  cmd->add_option("-i,--input", c.input, "Input PGM")->required();
  cmd->add_option("-o,--output", c.output, "Output PGM")->required();
  cmd->add_option("--format", c.format, "Output encoding")
      ->check(CLI::IsMember({"p2", "p5"}))
      ->capture_default_str();
}

const std::vector<std::string> kBorders{"replicate", "zero"};
const std::vector<std::string> kVariants{"four", "eight"};
const std::vector<std::string> kDisplays{"clamp", "rescale"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grayfilt - spatial-domain filtering of 8-bit grayscale PGM images"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();

  Common io;
  std::function<void()> action;

  // --- point operations ---------------------------------------------------
  auto* negate_cmd = app.add_subcommand("negate", "s = 255 - r");
  add_io(negate_cmd, io);
  negate_cmd->callback([&] {
    action = [&] { save_pgm(io.output, negate(load_pgm(io.input)), parse_pgm_format(io.format)); };
  });

  double gamma = kDefaultGamma;
  auto* stretch_cmd = app.add_subcommand("stretch", "Power-law gray-scale stretch 255*(r/255)^gamma");
  add_io(stretch_cmd, io);
  stretch_cmd->add_option("--gamma", gamma, "Exponent (> 0)")->capture_default_str();
  stretch_cmd->callback([&] {
    action = [&] {
      save_pgm(io.output, gray_stretch(load_pgm(io.input), gamma), parse_pgm_format(io.format));
    };
  });

  std::string table_path;
  auto* lut_cmd = app.add_subcommand("lut", "Apply a 256-entry lookup table");
  add_io(lut_cmd, io);
  lut_cmd->add_option("--table", table_path, "File of 256 integers in [0, 255]")->required();
  lut_cmd->callback([&] {
    action = [&] {
      const Lut lut = parse_lut(read_file(table_path));
      save_pgm(io.output, apply_lut(load_pgm(io.input), lut), parse_pgm_format(io.format));
    };
  });

  // --- Laplacian, sharpening, convolution -----------------------------------
  std::string variant = "four";
  std::string display = "clamp";
  std::string border = "replicate";

  auto* lap_cmd = app.add_subcommand("laplacian", "Discrete Laplacian response");
  add_io(lap_cmd, io);
  lap_cmd->add_option("--variant", variant)->check(CLI::IsMember(kVariants))->capture_default_str();
  lap_cmd->add_option("--display", display)->check(CLI::IsMember(kDisplays))->capture_default_str();
  lap_cmd->add_option("--border", border)->check(CLI::IsMember(kBorders))->capture_default_str();
  lap_cmd->callback([&] {
    action = [&] {
      const SignedImage s = laplacian(load_pgm(io.input), parse_variant(variant), parse_border(border));
      save_pgm(io.output, clamp_to_display(s, parse_display(display)), parse_pgm_format(io.format));
    };
  });

  auto* sharpen_cmd = app.add_subcommand("sharpen", "Laplacian sharpening f - lap(f)");
  add_io(sharpen_cmd, io);
  sharpen_cmd->add_option("--variant", variant)->check(CLI::IsMember(kVariants))->capture_default_str();
  sharpen_cmd->add_option("--border", border)->check(CLI::IsMember(kBorders))->capture_default_str();
  sharpen_cmd->callback([&] {
    action = [&] {
      save_pgm(io.output,
               laplacian_sharpen(load_pgm(io.input), parse_variant(variant), parse_border(border)),
               parse_pgm_format(io.format));
    };
  });

  int radius = 1;
  auto* unsharp_cmd = app.add_subcommand("unsharp", "Unsharp masking f - box_blur(f)");
  add_io(unsharp_cmd, io);
  unsharp_cmd->add_option("--radius", radius, "Box blur radius (>= 1)")->capture_default_str();
  unsharp_cmd->add_option("--display", display)->check(CLI::IsMember(kDisplays))->capture_default_str();
  unsharp_cmd->add_option("--border", border)->check(CLI::IsMember(kBorders))->capture_default_str();
  unsharp_cmd->callback([&] {
    action = [&] {
      save_pgm(io.output,
               unsharp_mask(load_pgm(io.input), radius, parse_display(display), parse_border(border)),
               parse_pgm_format(io.format));
    };
  });

  std::string kernel_path;
  auto* conv_cmd = app.add_subcommand("convolve", "Convolve with a kernel file");
  add_io(conv_cmd, io);
  conv_cmd->add_option("--kernel", kernel_path, "Kernel text file")->required();
  conv_cmd->add_option("--border", border)->check(CLI::IsMember(kBorders))->capture_default_str();
  conv_cmd->add_option("--display", display)->check(CLI::IsMember(kDisplays))->capture_default_str();
  conv_cmd->callback([&] {
    action = [&] {
      const Kernel k = parse_kernel(read_file(kernel_path));
      const SignedImage s = convolve(load_pgm(io.input), k, parse_border(border));
      save_pgm(io.output, clamp_to_display(s, parse_display(display)), parse_pgm_format(io.format));
    };
  });

  // --- edges and arithmetic -----------------------------------------------
  int threshold = kDefaultThreshold;
  auto* bin_cmd = app.add_subcommand("binarize", "Threshold to a 0/255 image");
  add_io(bin_cmd, io);
  bin_cmd->add_option("--threshold", threshold)->capture_default_str();
  bin_cmd->callback([&] {
    action = [&] {
      save_pgm(io.output, render_binary(binarize(load_pgm(io.input), threshold)),
               parse_pgm_format(io.format));
    };
  });

  auto* edges_cmd = app.add_subcommand("edges", "Binary edge points rendered as 0/255");
  add_io(edges_cmd, io);
  edges_cmd->add_option("--threshold", threshold)->capture_default_str();
  edges_cmd->callback([&] {
    action = [&] {
      save_pgm(io.output, render_binary(edge_points(binarize(load_pgm(io.input), threshold))),
               parse_pgm_format(io.format));
    };
  });

  std::string second;
  auto* add_cmd = app.add_subcommand("add", "Saturating addition of two images");
  add_io(add_cmd, io);
  add_cmd->add_option("-j,--second", second, "Second input PGM")->required();
  add_cmd->callback([&] {
    action = [&] {
      save_pgm(io.output, image_add(load_pgm(io.input), load_pgm(second)), parse_pgm_format(io.format));
    };
  });

  bool invert = false;
  auto* shadow_cmd = app.add_subcommand("shadow", "North-east shadow relief");
  add_io(shadow_cmd, io);
  shadow_cmd->add_flag("--invert", invert, "Negate the shadow rendering");
  shadow_cmd->callback([&] {
    action = [&] {
      const Image in = load_pgm(io.input);
      save_pgm(io.output, invert ? shadow_invert(in) : shadow_ne(in), parse_pgm_format(io.format));
    };
  });

  // --- histogram ------------------------------------------------------------
  std::string csv_path;
  std::string render_path;
  auto* hist_cmd = app.add_subcommand("histogram", "Gray-level histogram as CSV and bar chart");
  hist_cmd->add_option("-i,--input", io.input, "Input PGM")->required();
  hist_cmd->add_option("--csv", csv_path, "CSV output path")->required();
  hist_cmd->add_option("--render", render_path, "Bar chart PGM output path");
  hist_cmd->add_option("--format", io.format)->check(CLI::IsMember({"p2", "p5"}))->capture_default_str();
  hist_cmd->callback([&] {
    action = [&] {
      const Histogram h = compute_histogram(load_pgm(io.input));
      write_file_atomic(csv_path, histogram_csv(h));
      if (!render_path.empty()) save_pgm(render_path, render_histogram(h), parse_pgm_format(io.format));
    };
  });

  // --- pipeline -------------------------------------------------------------
  std::string spec_path;
  auto* pipe_cmd = app.add_subcommand("pipeline", "Run a JSON pipeline of stages");
  add_io(pipe_cmd, io);
  pipe_cmd->add_option("--spec", spec_path, "Pipeline JSON file")->required();
  pipe_cmd->callback([&] {
    action = [&] {
      const std::filesystem::path sp(spec_path);
      const PipelineSpec spec = parse_pipeline(read_file(sp), sp.parent_path());
      save_pgm(io.output, run_pipeline(spec, load_pgm(io.input)), parse_pgm_format(io.format));
    };
  });

  // --- bench ----------------------------------------------------------------
  int size = 512;
  int ksize = 3;
  int iters = 10;
  std::string report_path;
  auto* bench_cmd = app.add_subcommand("bench", "Correlation micro-benchmark");
  bench_cmd->add_option("--size", size, "Image side length")->capture_default_str();
  bench_cmd->add_option("--ksize", ksize, "Odd kernel side length")->capture_default_str();
  bench_cmd->add_option("--iters", iters, "Repetitions")->capture_default_str();
  bench_cmd->add_option("-o,--output", report_path, "Report file (also echoed to stderr)");
  bench_cmd->callback([&] {
    action = [&] {
      const std::string text = bench_convolve(size, ksize, iters).to_text();
      std::cerr << text;
      if (!report_path.empty()) write_file_atomic(report_path, text);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kUsage;
  }

  try {
    set_thread_count(threads);
    action();
  } catch (const ParameterError& e) {
    std::cerr << "grayfilt: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "grayfilt: " << e.what() << '\n';
    return kIo;
  } catch (const std::system_error& e) {
    std::cerr << "grayfilt: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    std::cerr << "grayfilt: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "grayfilt: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}
