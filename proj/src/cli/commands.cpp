#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "mensura/construct.hpp"
#include "mensura/triples.hpp"
#include "render.hpp"

namespace mensura::cli {
namespace {

void require_digits(const RunConfig& config, int minimum) {
  if (config.precision_digits < minimum) {
    throw std::invalid_argument("--digits must be at least " + std::to_string(minimum) + " for this command");
  }
}

void require_not_svg(const RunConfig& config) {
  if (config.output_format == OutputFormat::svg) throw std::invalid_argument("svg output is only available for scan");
}

std::vector<ExactScalar> parse_lengths(const std::vector<std::string>& text) {
  std::vector<ExactScalar> out;
  out.reserve(text.size());
  for (const auto& t : text) out.emplace_back(parse_decimal(t));
  return out;
}

QuadSides parse_quad(const std::vector<std::string>& text) {
  if (text.size() != 4) throw std::invalid_argument("expected four side lengths");
  const auto s = parse_lengths(text);
  return QuadSides(s[0], s[1], s[2], s[3]);
}

Json exact_list(std::span<const ExactScalar> values, int digits) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(exact_json(v, digits));
  return out;
}

std::string sides_text(std::span<const ExactScalar> values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ", ") + v.to_string();
  return out;
}

Json triple_json(const PythTriple& t) { return Json::array({t.l(), t.m(), t.n()}); }

// Writes a report either as {command, config, report} JSON or as aligned
// "key: value" lines.
class Report {
 public:
  Report(std::string command, const RunConfig& config) : command_(std::move(command)), config_(config) {}

  void exact(const std::string& key, const ExactScalar& v) {
    add(key, exact_json(v, config_.precision_digits), exact_text(v, config_.precision_digits));
  }
  void decimal(const std::string& key, const ApproxScalar& v) {
    const std::string s = v.with_digits(config_.precision_digits).to_string();
    add(key, s, s);
  }
  void add(const std::string& key, Json json, std::string text) {
    json_[key] = std::move(json);
    lines_.emplace_back(key, std::move(text));
  }

  void write(std::ostream& out) const {
    if (config_.output_format == OutputFormat::json) {
      Json doc;
      doc["command"] = command_;
      doc["config"] = config_json(config_);
      doc["report"] = json_;
      out << dump(doc);
      return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : lines_) width = std::max(width, k.size());
    for (const auto& [k, v] : lines_) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  }

 private:
  std::string command_;
  const RunConfig& config_;
  Json json_ = Json::object();
  std::vector<std::pair<std::string, std::string>> lines_;
};

void triangle_report(const std::vector<ExactScalar>& s, Report& report, int digits) {
  const Triangle t(s[0], s[1], s[2]);
  report.add("figure", "triangle", "triangle");
  report.add("sides", exact_list(t.sides(), digits), sides_text(t.sides()));
  report.exact("semiperimeter", (s[0] + s[1] + s[2]) * Surd(Rational(1, 2)));
  report.exact("heron_area", heron_area(t));
  report.exact("circumradius", triangle_circumradius(t));
}

void quad_report_with_diagonal(const QuadSides& q, const ExactScalar& diagonal, const RunConfig& config,
                               Report& report) {
  const int digits = config.precision_digits;
  const DiagQuad dq(q, diagonal);
  const auto [first, second] = split_triangle_areas(dq);
  const Surd two(2);

  report.exact("diagonal", diagonal);
  report.add("triangle_areas", exact_list(std::array{first, second}, digits),
             exact_text(first, digits) + "; " + exact_text(second, digits));
  try {
    report.exact("split_area", first + second);
  } catch (const IncompatibleRadicands&) {
    report.decimal("split_area", approx(first, digits) + approx(second, digits));
  }
  const ExactScalar h1 = two * first / diagonal;
  const ExactScalar h2 = two * second / diagonal;
  report.add("perpendiculars", exact_list(std::array{h1, h2}, digits),
             exact_text(h1, digits) + "; " + exact_text(h2, digits));

  const bool cyclic = diagonal == cyclic_diagonal_pair(q).p;
  report.add("cyclic", cyclic, cyclic ? "true" : "false");

  const EmbeddedQuad e = embed(dq, digits);
  const ApproxScalar tolerance = oracle_tolerance(digits);
  const ApproxScalar other = distance(e.points[1], e.points[3]);
  const ApproxScalar opposite = approx(q.a() * q.c() + q.b() * q.d(), digits);
  const ApproxScalar residual = (approx(diagonal, digits) * other - opposite).abs();
  const ConcyclicVerdict verdict = concyclic_verdict(e, tolerance);
  Json oracle;
  oracle["shoelace_area"] = shoelace_area(e).to_string();
  oracle["other_diagonal"] = other.to_string();
  oracle["ptolemy_residual"] = residual.to_string();
  oracle["ptolemy"] = residual <= tolerance;
  oracle["concyclic"] = verdict.concyclic;
  oracle["circumradius"] = verdict.radius.to_string();
  report.add("oracle", oracle,
             "shoelace " + shoelace_area(e).to_string() + ", other diagonal " + other.to_string() + ", ptolemy " +
                 (residual <= tolerance ? "true" : "false") + ", concyclic " +
                 (verdict.concyclic ? "true" : "false"));
}

}  // namespace

int cmd_reproduce(const RunConfig& config, std::ostream& out) { return cmd_reproduce(config, manifest_cases(), out); }

int cmd_reproduce(const RunConfig& config, const std::vector<ManifestCase>& cases, std::ostream& out) {
  require_digits(config, 10);
  require_not_svg(config);
  std::vector<ManifestEntry> entries;
  entries.reserve(cases.size());
  for (const auto& c : cases) entries.push_back(evaluate(c, config));
  const auto passed = std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
  const int digits = config.precision_digits;

  if (config.output_format == OutputFormat::json) {
    Json doc;
    doc["command"] = "reproduce";
    doc["config"] = config_json(config);
    Json list = Json::array();
    for (const auto& e : entries) {
      Json j;
      j["id"] = e.id;
      j["description"] = e.description;
      j["expected"] = value_json(e.expected, digits);
      j["computed"] = value_json(e.computed, digits);
      j["tolerance"] = e.tolerance ? Json(e.tolerance->to_string()) : Json(nullptr);
      j["status"] = e.pass ? "pass" : "fail";
      j["provenance"] = e.provenance;
      list.push_back(std::move(j));
    }
    doc["entries"] = std::move(list);
    doc["summary"] = {{"passed", passed}, {"total", entries.size()}};
    out << dump(doc);
  } else {
    for (const auto& e : entries) {
      out << (e.pass ? "PASS  " : "FAIL  ") << e.id << "\n"
          << "      " << e.description << "\n"
          << "      expected: " << value_text(e.expected, digits) << "\n"
          << "      computed: " << value_text(e.computed, digits) << "\n";
      if (e.tolerance) out << "      tolerance: " << e.tolerance->to_string() << "\n";
      out << "      source: " << e.provenance << "\n";
    }
    out << passed << "/" << entries.size() << " entries passed\n";
  }
  return passed == static_cast<long>(entries.size()) ? kExitOk : kExitManifestFailure;
}

int cmd_area(const std::vector<std::string>& lengths, const std::optional<std::string>& diagonal,
             const RunConfig& config, std::ostream& out) {
  require_not_svg(config);
  const int digits = config.precision_digits;
  Report report("area", config);
  const auto sides = parse_lengths(lengths);
  if (sides.size() == 3) {
    if (diagonal) throw std::invalid_argument("--diagonal needs four sides");
    triangle_report(sides, report, digits);
  } else if (sides.size() == 4) {
    const QuadSides q(sides[0], sides[1], sides[2], sides[3]);
    const MensurationReport base = quad_report(q);
    const DiagonalPair cyclic = cyclic_diagonal_pair(q);
    report.add("figure", "quadrilateral", "quadrilateral");
    report.add("sides", exact_list(q.sides(), digits), sides_text(q.sides()));
    report.exact("semiperimeter", base.semiperimeter);
    report.exact("gross_area", base.gross_area);
    report.exact("sutra_area", base.sutra_area);
    report.add("cyclic_diagonals", {{"p", exact_json(cyclic.p, digits)}, {"q", exact_json(cyclic.q, digits)}},
               exact_text(cyclic.p, digits) + "; " + exact_text(cyclic.q, digits));
    if (diagonal) {
      require_digits(config, 10);
      quad_report_with_diagonal(q, ExactScalar(parse_decimal(*diagonal)), config, report);
    }
  } else {
    throw std::invalid_argument("area takes three (triangle) or four (quadrilateral) lengths");
  }
  report.write(out);
  return kExitOk;
}

int cmd_construct(const std::array<std::int64_t, 6>& v, const RunConfig& config, std::ostream& out) {
  require_not_svg(config);
  require_digits(config, 10);
  const int digits = config.precision_digits;
  const PythTriple t1 = validate_triple(v[0], v[1], v[2]);
  const PythTriple t2 = validate_triple(v[3], v[4], v[5]);
  const CyclicQuadConstruction built = brahmagupta_quad(t1, t2);
  const DiagonalPair cyclic = cyclic_diagonal_pair(built.sides);
  const DiagQuad glued = built.glue_split();
  const EmbeddedQuad e = embed(glued, digits);
  const ConcyclicVerdict verdict = concyclic_verdict(e, oracle_tolerance(digits));

  Report report("construct", config);
  report.add("triples", Json::array({triple_json(t1), triple_json(t2)}),
             "(" + std::to_string(t1.l()) + ", " + std::to_string(t1.m()) + ", " + std::to_string(t1.n()) +
                 ") and (" + std::to_string(t2.l()) + ", " + std::to_string(t2.m()) + ", " +
                 std::to_string(t2.n()) + ")");
  report.add("sides", exact_list(built.sides.sides(), digits), sides_text(built.sides.sides()));
  report.exact("glue_diagonal", built.glue_diagonal);
  report.exact("circumdiameter", built.circumdiameter);
  report.add("cyclic_diagonals", {{"p", exact_json(cyclic.p, digits)}, {"q", exact_json(cyclic.q, digits)}},
             exact_text(cyclic.p, digits) + "; " + exact_text(cyclic.q, digits));
  report.exact("sutra_area", sutra_area(built.sides));
  report.exact("split_area", *area_by_diagonal(glued).split_area);
  const bool ptolemy = ptolemy_check(built.sides, cyclic);
  report.add("ptolemy", ptolemy, ptolemy ? "true" : "false");
  report.add("oracle", {{"concyclic", verdict.concyclic}, {"circumradius", verdict.radius.to_string()}},
             std::string("concyclic ") + (verdict.concyclic ? "true" : "false") + ", circumradius " +
                 verdict.radius.to_string());
  report.write(out);
  return kExitOk;
}

int cmd_scan(const std::vector<std::string>& sides, const RunConfig& config, std::ostream& out) {
  const int digits = config.precision_digits;
  const QuadSides q = parse_quad(sides);
  const ScanResult scan = area_scan(q, config.scan_steps, digits);
  if (config.output_format == OutputFormat::svg) {
    out << render_scan_svg(q, scan, digits);
    return kExitOk;
  }
  const auto lowest = std::min_element(scan.samples.begin(), scan.samples.end(),
                                       [](const auto& a, const auto& b) { return a.area < b.area; });

  Report report("scan", config);
  report.add("sides", exact_list(q.sides(), digits), sides_text(q.sides()));
  report.add("diagonal_range", {{"lower", exact_json(scan.lower, digits)}, {"upper", exact_json(scan.upper, digits)}},
             "(" + scan.lower.to_string() + ", " + scan.upper.to_string() + ")");
  report.exact("step", scan.step);
  report.add("samples_count", scan.samples.size(), std::to_string(scan.samples.size()));
  report.decimal("argmax_diagonal", scan.argmax_diagonal);
  report.decimal("max_area", scan.max_area);
  report.decimal("min_area", lowest->area);
  report.exact("sutra_area", sutra_area(q));
  report.exact("cyclic_diagonal", cyclic_diagonal_pair(q).p);
  if (config.output_format == OutputFormat::json) {
    Json samples = Json::array();
    for (const auto& s : scan.samples) {
      samples.push_back({{"diagonal", s.diagonal.to_string()}, {"area", s.area.to_string()}});
    }
    report.add("samples", std::move(samples), "");
  }
  report.write(out);
  return kExitOk;
}

int cmd_rhombus(const std::optional<std::array<std::string, 2>>& side_and_d1,
                const std::optional<std::array<std::int64_t, 3>>& triple, const RunConfig& config,
                std::ostream& out) {
  require_not_svg(config);
  if (side_and_d1.has_value() == triple.has_value()) {
    throw std::invalid_argument("rhombus takes either SIDE D1 or --triple L M N");
  }
  const Rhombus r = triple ? rhombus_from_triple(validate_triple((*triple)[0], (*triple)[1], (*triple)[2]))
                           : Rhombus(parse_decimal((*side_and_d1)[0]), parse_decimal((*side_and_d1)[1]));
  const ExactScalar area = rhombus_area(r);
  const ExactScalar square = r.side * r.side;
  const auto order = surd_cmp(area, square);

  Report report("rhombus", config);
  report.exact("side", r.side);
  report.exact("d1", r.d1);
  report.exact("d2", rhombus_second_diagonal(r));
  report.exact("area", area);
  report.exact("square_area", square);
  const std::string relation = order < 0 ? "less" : (order > 0 ? "greater" : "equal");
  report.add("area_vs_square", relation, relation);
  report.write(out);
  return kExitOk;
}

int cmd_triples(std::int64_t max_hypotenuse, bool pairs, const RunConfig& config, std::ostream& out) {
  require_not_svg(config);
  if (max_hypotenuse < 5) throw std::invalid_argument("max hypotenuse must be at least 5");
  auto text = [](const PythTriple& t) {
    return "(" + std::to_string(t.l()) + ", " + std::to_string(t.m()) + ", " + std::to_string(t.n()) + ")";
  };
  Json list = Json::array();
  std::string lines;
  if (pairs) {
    for (const auto& [a, b] : hypotenuse_pairs(max_hypotenuse)) {
      list.push_back(Json::array({triple_json(a), triple_json(b)}));
      lines += text(a) + " " + text(b) + "\n";
    }
  } else {
    for (const auto& t : generate_triples(max_hypotenuse)) {
      list.push_back(triple_json(t));
      lines += text(t) + "\n";
    }
  }
  if (config.output_format == OutputFormat::json) {
    Json doc;
    doc["command"] = "triples";
    doc["config"] = config_json(config);
    doc["report"] = {{"max_hypotenuse", max_hypotenuse}, {pairs ? "pairs" : "triples", std::move(list)}};
    out << dump(doc);
  } else {
    out << lines;
  }
  return kExitOk;
}

}  // namespace mensura::cli
