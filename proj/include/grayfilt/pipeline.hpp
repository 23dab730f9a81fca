#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grayfilt/conv.hpp"
#include "grayfilt/core.hpp"
#include "grayfilt/edge.hpp"
#include "grayfilt/point_ops.hpp"

namespace grayfilt {

// Stage parameters, already validated. Each stage maps Image -> Image.
namespace stage {
struct Negate {};
struct Stretch { double gamma = kDefaultGamma; };
struct ApplyLut { Lut lut; };
struct Laplacian {
  LaplacianVariant variant = LaplacianVariant::four;
  DisplayMode display = DisplayMode::clamp;
  BorderPolicy border = BorderPolicy::replicate;
};
struct Sharpen {
  LaplacianVariant variant = LaplacianVariant::four;
  BorderPolicy border = BorderPolicy::replicate;
};
struct Unsharp {
  int radius = 1;
  DisplayMode display = DisplayMode::clamp;
  BorderPolicy border = BorderPolicy::replicate;
};
struct Convolve {
  Kernel kernel;
  BorderPolicy border = BorderPolicy::replicate;
  DisplayMode display = DisplayMode::clamp;
};
/// Bits rendered as 0/255.
struct Binarize { int threshold = kDefaultThreshold; };
/// edge_points of the binarized image, rendered as 0/255.
struct Edges { int threshold = kDefaultThreshold; };
/// Saturating add of a second image; nullopt adds the pipeline's input.
struct Add { std::optional<Image> other; };
struct Shadow { bool invert = false; };
}  // namespace stage

using Stage = std::variant<stage::Negate, stage::Stretch, stage::ApplyLut, stage::Laplacian,
                           stage::Sharpen, stage::Unsharp, stage::Convolve, stage::Binarize,
                           stage::Edges, stage::Add, stage::Shadow>;

struct PipelineSpec {
  std::vector<Stage> stages;
};

/// Operation name as used on the command line and in spec files.
std::string_view stage_name(const Stage& s);

/// Applies one stage. `input` is the pipeline's original image.
Image apply_stage(const Stage& s, const Image& current, const Image& input);

/// stage_n(...stage_1(input)). A failing stage is reported as
/// DomainError("stage <k> (<op>): ...") with a 1-based index.
Image run_pipeline(const PipelineSpec& spec, const Image& input);

/// Parses {"stages":[{"op":"negate"},{"op":"unsharp","radius":1}, ...]}.
/// Every stage is validated before returning. File parameters ("kernel",
/// "table", "with") are resolved relative to base_dir.
///   malformed JSON             -> FormatError
///   unknown op / bad parameter -> ParameterError
PipelineSpec parse_pipeline(std::string_view json_text,
                            const std::filesystem::path& base_dir = {});

/// Reads a LUT file: 256 whitespace-separated integers in [0, 255].
Lut parse_lut(std::string_view text);

}  // namespace grayfilt
