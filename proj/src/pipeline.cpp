#include "grayfilt/pipeline.hpp"

#include <charconv>
#include <set>

#include <json.hpp>

#include "grayfilt/enhance.hpp"
#include "grayfilt/imgio.hpp"

namespace grayfilt {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

class StageParams {
 public:
  StageParams(const json& obj, std::size_t index, std::string op)
      : obj_(obj), index_(index), op_(std::move(op)) {}

  std::string prefix() const { return "stage " + std::to_string(index_ + 1) + " (" + op_ + "): "; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParameterError(prefix() + msg); }

  void allow(std::initializer_list<const char*> keys) const {
    std::set<std::string> ok{"op"};
    for (const char* k : keys) ok.insert(k);
    for (const auto& [key, value] : obj_.items()) {
      if (!ok.contains(key)) fail("unknown parameter '" + key + "'");
    }
  }

  bool has(const char* key) const { return obj_.contains(key); }
  const json& raw(const char* key) const { return obj_.at(key); }

  std::string str(const char* key, const char* fallback) const {
    if (!has(key)) return fallback;
    if (!obj_.at(key).is_string()) fail(std::string("'") + key + "' must be a string");
    return obj_.at(key).get<std::string>();
  }

  double number(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    if (!obj_.at(key).is_number()) fail(std::string("'") + key + "' must be a number");
    return obj_.at(key).get<double>();
  }

  int integer(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    if (!obj_.at(key).is_number_integer()) fail(std::string("'") + key + "' must be an integer");
    return obj_.at(key).get<int>();
  }

  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    if (!obj_.at(key).is_boolean()) fail(std::string("'") + key + "' must be true or false");
    return obj_.at(key).get<bool>();
  }

  // Converts library ParameterError/FormatError into stage-tagged errors.
  template <class F>
  auto checked(F&& f) const {
    try {
      return f();
    } catch (const ParameterError& e) {
      fail(e.what());
    } catch (const FormatError& e) {
      throw FormatError(prefix() + e.what());
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

 private:
  const json& obj_;
  std::size_t index_;
  std::string op_;
};

Kernel kernel_from_json(const StageParams& p, const std::filesystem::path& base_dir) {
  if (!p.has("kernel")) p.fail("missing 'kernel'");
  const json& k = p.raw("kernel");
  if (k.is_string()) {
    return p.checked([&] { return parse_kernel(read_file(base_dir / k.get<std::string>())); });
  }
  if (!k.is_array() || k.empty()) p.fail("'kernel' must be a file path or an array of rows");
  const std::size_t rows = k.size();
  std::size_t cols = 0;
  std::vector<double> coeffs;
  for (const auto& row : k) {
    if (!row.is_array() || row.empty()) p.fail("'kernel' rows must be non-empty arrays");
    if (cols == 0) cols = row.size();
    if (row.size() != cols) p.fail("'kernel' rows must have equal length");
    for (const auto& c : row) {
      if (!c.is_number()) p.fail("'kernel' coefficients must be numbers");
      coeffs.push_back(c.get<double>());
    }
  }
  return p.checked([&] { return Kernel(static_cast<int>(cols), static_cast<int>(rows), std::move(coeffs)); });
}

Lut lut_from_json(const StageParams& p, const std::filesystem::path& base_dir) {
  if (!p.has("table")) p.fail("missing 'table'");
  const json& t = p.raw("table");
  if (t.is_string()) {
    return p.checked([&] { return parse_lut(read_file(base_dir / t.get<std::string>())); });
  }
  if (!t.is_array() || t.size() != kLevels) p.fail("'table' must be a file path or 256 integers");
  Lut lut;
  for (int i = 0; i < kLevels; ++i) {
    if (!t[i].is_number_integer()) p.fail("'table' entries must be integers");
    const auto v = t[i].get<long long>();
    if (v < 0 || v > kMaxGray) p.fail("'table' entries must be in [0, 255]");
    lut.table[i] = static_cast<Gray>(v);
  }
  return lut;
}

Stage parse_stage(const json& obj, std::size_t index, const std::filesystem::path& base_dir) {
  if (!obj.is_object()) {
    throw ParameterError("stage " + std::to_string(index + 1) + ": must be an object");
  }
  if (!obj.contains("op") || !obj.at("op").is_string()) {
    throw ParameterError("stage " + std::to_string(index + 1) + ": missing string 'op'");
  }
  const std::string op = obj.at("op").get<std::string>();
  const StageParams p(obj, index, op);

  auto border = [&] { return p.checked([&] { return parse_border(p.str("border", "replicate")); }); };
  auto display = [&] { return p.checked([&] { return parse_display(p.str("display", "clamp")); }); };
  auto variant = [&] { return p.checked([&] { return parse_variant(p.str("variant", "four")); }); };
  auto threshold = [&] {
    const int t = p.integer("threshold", kDefaultThreshold);
    if (t < 0 || t > kMaxGray) p.fail("'threshold' must be in [0, 255]");
    return t;
  };

  if (op == "negate") {
    p.allow({});
    return stage::Negate{};
  }
  if (op == "stretch") {
    p.allow({"gamma"});
    const double gamma = p.number("gamma", kDefaultGamma);
    p.checked([&] { return Lut::power(gamma); });
    return stage::Stretch{gamma};
  }
  if (op == "lut") {
    p.allow({"table"});
    return stage::ApplyLut{lut_from_json(p, base_dir)};
  }
  if (op == "laplacian") {
    p.allow({"variant", "display", "border"});
    return stage::Laplacian{variant(), display(), border()};
  }
  if (op == "sharpen") {
    p.allow({"variant", "border"});
    return stage::Sharpen{variant(), border()};
  }
  if (op == "unsharp") {
    p.allow({"radius", "display", "border"});
    const int radius = p.integer("radius", 1);
    if (radius < 1) p.fail("'radius' must be >= 1");
    return stage::Unsharp{radius, display(), border()};
  }
  if (op == "convolve") {
    p.allow({"kernel", "border", "display"});
    return stage::Convolve{kernel_from_json(p, base_dir), border(), display()};
  }
  if (op == "binarize") {
    p.allow({"threshold"});
    return stage::Binarize{threshold()};
  }
  if (op == "edges") {
    p.allow({"threshold"});
    return stage::Edges{threshold()};
  }
  if (op == "add") {
    p.allow({"with"});
    if (!p.has("with")) return stage::Add{};
    const std::string path = p.str("with", "");
    return stage::Add{p.checked([&] { return load_pgm(base_dir / path); })};
  }
  if (op == "shadow") {
    p.allow({"invert"});
    return stage::Shadow{p.boolean("invert", false)};
  }
  throw ParameterError("stage " + std::to_string(index + 1) + ": unknown op '" + op + "'");
}

}  // namespace

std::string_view stage_name(const Stage& s) {
  return std::visit(
      overloaded{
          [](const stage::Negate&) { return std::string_view("negate"); },
          [](const stage::Stretch&) { return std::string_view("stretch"); },
          [](const stage::ApplyLut&) { return std::string_view("lut"); },
          [](const stage::Laplacian&) { return std::string_view("laplacian"); },
          [](const stage::Sharpen&) { return std::string_view("sharpen"); },
          [](const stage::Unsharp&) { return std::string_view("unsharp"); },
          [](const stage::Convolve&) { return std::string_view("convolve"); },
          [](const stage::Binarize&) { return std::string_view("binarize"); },
          [](const stage::Edges&) { return std::string_view("edges"); },
          [](const stage::Add&) { return std::string_view("add"); },
          [](const stage::Shadow&) { return std::string_view("shadow"); },
      },
      s);
}

Image apply_stage(const Stage& s, const Image& current, const Image& input) {
  return std::visit(
      overloaded{
          [&](const stage::Negate&) { return negate(current); },
          [&](const stage::Stretch& st) { return gray_stretch(current, st.gamma); },
          [&](const stage::ApplyLut& st) { return apply_lut(current, st.lut); },
          [&](const stage::Laplacian& st) {
            return clamp_to_display(laplacian(current, st.variant, st.border), st.display);
          },
          [&](const stage::Sharpen& st) { return laplacian_sharpen(current, st.variant, st.border); },
          [&](const stage::Unsharp& st) {
            return unsharp_mask(current, st.radius, st.display, st.border);
          },
          [&](const stage::Convolve& st) {
            return clamp_to_display(convolve(current, st.kernel, st.border), st.display);
          },
          [&](const stage::Binarize& st) { return render_binary(binarize(current, st.threshold)); },
          [&](const stage::Edges& st) {
            return render_binary(edge_points(binarize(current, st.threshold)));
          },
          [&](const stage::Add& st) { return image_add(current, st.other ? *st.other : input); },
          [&](const stage::Shadow& st) {
            return st.invert ? shadow_invert(current) : shadow_ne(current);
          },
      },
      s);
}

Image run_pipeline(const PipelineSpec& spec, const Image& input) {
  if (spec.stages.empty()) throw ParameterError("pipeline: no stages");
  Image current = input;
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    try {
      current = apply_stage(spec.stages[i], current, input);
    } catch (const std::exception& e) {
      throw DomainError("stage " + std::to_string(i + 1) + " (" +
                        std::string(stage_name(spec.stages[i])) + "): " + e.what());
    }
  }
  return current;
}

PipelineSpec parse_pipeline(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("pipeline: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("stages") || !doc.at("stages").is_array()) {
    throw ParameterError("pipeline: expected an object with a \"stages\" array");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "stages") throw ParameterError("pipeline: unknown key '" + key + "'");
  }
  const json& stages = doc.at("stages");
  if (stages.empty()) throw ParameterError("pipeline: \"stages\" must not be empty");
  PipelineSpec spec;
  spec.stages.reserve(stages.size());
  for (std::size_t i = 0; i < stages.size(); ++i) {
    spec.stages.push_back(parse_stage(stages[i], i, base_dir));
  }
  return spec;
}

Lut parse_lut(std::string_view text) {
  Lut lut;
  std::size_t pos = 0;
  int n = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (true) {
    while (pos < text.size() && space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && !space(text[pos])) ++pos;
    const std::string_view tok = text.substr(start, pos - start);
    int v = -1;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0 || v > kMaxGray) {
      throw FormatError("lut: entry " + std::to_string(n) + ": expected an integer in [0, 255], got '" +
                        std::string(tok) + "'");
    }
    if (n == kLevels) throw FormatError("lut: more than 256 entries");
    lut.table[n++] = static_cast<Gray>(v);
  }
  if (n != kLevels) throw FormatError("lut: expected 256 entries, got " + std::to_string(n));
  return lut;
}

}  // namespace grayfilt
