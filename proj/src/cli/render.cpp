#include "render.hpp"

namespace mensura::cli {

Json exact_json(const ExactScalar& value, int digits) {
  Json out;
  out["coefficient"] = {{"num", value.coefficient().get_num().get_str()},
                        {"den", value.coefficient().get_den().get_str()}};
  out["radicand"] = value.radicand().get_str();
  out["decimal"] = approx(value, digits).to_string();
  return out;
}

Json value_json(const ManifestValue& value, int digits) {
  struct Visitor {
    int digits;
    Json operator()(const ExactScalar& v) const { return exact_json(v, digits); }
    Json operator()(const ApproxScalar& v) const { return v.with_digits(digits).to_string(); }
    Json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{digits}, value);
}

Json config_json(const RunConfig& config) {
  Json out;
  out["precision_digits"] = config.precision_digits;
  out["scan_steps"] = config.scan_steps;
  out["output_format"] = format_name(config.output_format);
  out["seed"] = config.seed;
  return out;
}

std::string exact_text(const ExactScalar& value, int digits) {
  if (value.is_rational()) return value.to_string();
  return value.to_string() + " ≈ " + approx(value, digits).to_string();
}

std::string value_text(const ManifestValue& value, int digits) {
  struct Visitor {
    int digits;
    std::string operator()(const ExactScalar& v) const { return exact_text(v, digits); }
    std::string operator()(const ApproxScalar& v) const { return v.with_digits(digits).to_string(); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{digits}, value);
}

std::string format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      return "text";
    case OutputFormat::json:
      return "json";
    case OutputFormat::svg:
      return "svg";
  }
  return "text";
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace mensura::cli
