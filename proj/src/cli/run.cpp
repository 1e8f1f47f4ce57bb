#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "mensura/cli.hpp"

namespace mensura::cli {
namespace {

struct Parsed {
  RunConfig config;
  std::string format = "text";
  std::optional<std::string> out_path;
  std::vector<std::string> lengths;
  std::optional<std::string> diagonal;
  std::vector<std::int64_t> triples;
  std::vector<std::string> rhombus_args;
  std::vector<std::int64_t> rhombus_triple;
  std::int64_t max_hypotenuse = 100;
  bool pairs = false;
};

void add_globals(CLI::App& app, Parsed& p) {
  app.add_option("--digits", p.config.precision_digits, "Significant digits for approximations")
      ->check(CLI::Range(1, 100000));
  app.add_option("--steps", p.config.scan_steps, "Interior samples for scan")->check(CLI::PositiveNumber);
  app.add_option("--format", p.format, "Output format: text, json or svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  app.add_option("--seed", p.config.seed, "Seed for randomized property entries");
  app.add_option("--out", p.out_path, "Write output to PATH instead of stdout");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Parsed p;
  CLI::App app{"Exact mensuration of triangles and quadrilaterals", "mensura"};
  app.fallthrough();
  app.require_subcommand(1);
  add_globals(app, p);

  auto* reproduce = app.add_subcommand("reproduce", "Run the built-in reproduction manifest");

  auto* area = app.add_subcommand("area", "Report on a triangle (3 sides) or quadrilateral (4 sides)");
  area->add_option("lengths", p.lengths, "Side lengths in cyclic order")->required()->expected(3, 4);
  area->add_option("--diagonal", p.diagonal, "Diagonal from the first vertex, splitting (a,b) from (c,d)");

  auto* construct = app.add_subcommand("construct", "Cyclic quadrilateral from two Pythagorean triples");
  construct->add_option("triples", p.triples, "l1 m1 n1 l2 m2 n2")->required()->expected(6);

  auto* scan = app.add_subcommand("scan", "Sample area against the (a,b)|(c,d) diagonal");
  scan->add_option("sides", p.lengths, "Four side lengths in cyclic order")->required()->expected(4);

  auto* rhombus = app.add_subcommand("rhombus", "Rhombus from a side and one diagonal, or from a triple");
  auto* rhombus_pos = rhombus->add_option("side_d1", p.rhombus_args, "SIDE D1")->expected(2);
  auto* rhombus_triple = rhombus->add_option("--triple", p.rhombus_triple, "L M N")->expected(3);
  rhombus_pos->excludes(rhombus_triple);

  auto* triples = app.add_subcommand("triples", "List Pythagorean triples by hypotenuse");
  triples->add_option("max", p.max_hypotenuse, "Largest hypotenuse")->required();
  triples->add_flag("--pairs", p.pairs, "List pairs sharing a hypotenuse");

  for (auto* sub : {reproduce, area, construct, scan, rhombus, triples}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  p.config.output_format = p.format == "json"  ? OutputFormat::json
                           : p.format == "svg" ? OutputFormat::svg
                                               : OutputFormat::text;

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    const RunConfig& config = p.config;
    if (config.output_format == OutputFormat::svg && !scan->parsed()) {
      throw std::invalid_argument("svg output is only available for scan");
    }
    if (reproduce->parsed()) {
      status = cmd_reproduce(config, buffer);
    } else if (area->parsed()) {
      status = cmd_area(p.lengths, p.diagonal, config, buffer);
    } else if (construct->parsed()) {
      std::array<std::int64_t, 6> v{};
      std::copy(p.triples.begin(), p.triples.end(), v.begin());
      status = cmd_construct(v, config, buffer);
    } else if (scan->parsed()) {
      status = cmd_scan(p.lengths, config, buffer);
    } else if (rhombus->parsed()) {
      std::optional<std::array<std::string, 2>> side_d1;
      std::optional<std::array<std::int64_t, 3>> triple;
      if (!p.rhombus_args.empty()) side_d1 = std::array{p.rhombus_args[0], p.rhombus_args[1]};
      if (!p.rhombus_triple.empty()) triple = std::array{p.rhombus_triple[0], p.rhombus_triple[1], p.rhombus_triple[2]};
      status = cmd_rhombus(side_d1, triple, config, buffer);
    } else if (triples->parsed()) {
      status = cmd_triples(p.max_hypotenuse, p.pairs, config, buffer);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (p.out_path) {
    std::ofstream file(*p.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *p.out_path << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

}  // namespace mensura::cli
