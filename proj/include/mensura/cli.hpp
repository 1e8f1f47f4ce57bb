#pragma once

// Command-line surface: the reproduction manifest, per-figure commands, and
// their text / JSON / SVG renderings.

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mensura/exactnum.hpp"
#include "mensura/oracle.hpp"

namespace mensura::cli {

enum class OutputFormat { text, json, svg };

struct RunConfig {
  int precision_digits = ApproxScalar::kDefaultDigits;
  std::size_t scan_steps = 999;
  OutputFormat output_format = OutputFormat::text;
  std::uint64_t seed = 0;
};

/// Exact value, decimal approximation, or a verdict token such as "true",
/// "less" or "{77, 84, 85}".
using ManifestValue = std::variant<ExactScalar, ApproxScalar, std::string>;

struct Measurement {
  ManifestValue value;
  /// Present for approximate entries.
  std::optional<ApproxScalar> tolerance;
};

struct ManifestCase {
  std::string id;
  std::string description;
  std::string provenance;
  ManifestValue expected;
  std::function<Measurement(const RunConfig&)> compute;
};

struct ManifestEntry {
  std::string id;
  std::string description;
  ManifestValue expected;
  ManifestValue computed;
  std::optional<ApproxScalar> tolerance;
  bool pass = false;
  std::string provenance;
};

/// Smallest tolerance the oracle entries can honour at a given precision:
/// 1e-30, loosened at low digit counts.
ApproxScalar oracle_tolerance(int digits);

/// The built-in reproduction manifest.
std::vector<ManifestCase> manifest_cases();

ManifestEntry evaluate(const ManifestCase& c, const RunConfig& config);

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitManifestFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the manifest and renders it; returns kExitOk iff every entry passes.
int cmd_reproduce(const RunConfig& config, std::ostream& out);
int cmd_reproduce(const RunConfig& config, const std::vector<ManifestCase>& cases, std::ostream& out);

/// Three lengths give a triangle report, four a quadrilateral report.
int cmd_area(const std::vector<std::string>& lengths, const std::optional<std::string>& diagonal,
             const RunConfig& config, std::ostream& out);
int cmd_construct(const std::array<std::int64_t, 6>& triples, const RunConfig& config, std::ostream& out);
int cmd_scan(const std::vector<std::string>& sides, const RunConfig& config, std::ostream& out);
/// Either `side_and_d1` or `triple` is set.
int cmd_rhombus(const std::optional<std::array<std::string, 2>>& side_and_d1,
                const std::optional<std::array<std::int64_t, 3>>& triple, const RunConfig& config,
                std::ostream& out);
int cmd_triples(std::int64_t max_hypotenuse, bool pairs, const RunConfig& config, std::ostream& out);

/// Scan figure: area against diagonal plus snapshots of the hinged
/// quadrilateral at the first, best and last samples.
std::string render_scan_svg(const QuadSides& q, const ScanResult& scan, int digits);

/// Parses argv-style arguments (without the program name) and dispatches.
/// Domain and usage errors are reported on `err` with kExitUsage.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mensura::cli
