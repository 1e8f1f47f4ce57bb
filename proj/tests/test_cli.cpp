#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mensura/cli.hpp"

using namespace mensura;
using namespace mensura::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return read_file(std::string(MENSURA_GOLDEN_DIR) + "/" + name); }

// Runs the installed binary through the shell; returns {exit status, stdout}.
std::pair<int, std::string> run_binary(const std::string& args) {
  const std::string command = std::string(MENSURA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Cli, AreaQuadrilateral) {
  const Outcome o = run_cli({"area", "14", "12", "9", "13"});
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_NE(o.out.find("gross_area        575/4"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("30√22 ≈ 140.7124"), std::string::npos);
}

TEST(Cli, AreaTriangle) {
  const Outcome o = run_cli({"area", "3", "4", "5", "--format", "json"});
  ASSERT_EQ(o.status, kExitOk);
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["command"], "area");
  EXPECT_EQ(doc["report"]["heron_area"]["coefficient"]["num"], "6");
  EXPECT_EQ(doc["report"]["heron_area"]["radicand"], "1");
}

TEST(Cli, AreaWithCyclicDiagonal) {
  const Outcome o = run_cli({"area", "51", "68", "75", "40", "--diagonal", "85", "--format", "json"});
  ASSERT_EQ(o.status, kExitOk) << o.err;
  const auto report = nlohmann::json::parse(o.out)["report"];
  EXPECT_EQ(report["split_area"]["coefficient"]["num"], "3234");
  EXPECT_EQ(report["perpendiculars"][0]["coefficient"]["num"], "204");
  EXPECT_EQ(report["perpendiculars"][0]["coefficient"]["den"], "5");
  EXPECT_EQ(report["cyclic"], true);
  EXPECT_EQ(report["oracle"]["concyclic"], true);
  EXPECT_EQ(report["oracle"]["ptolemy"], true);
}

TEST(Cli, AreaWithWorkedDiagonal) {
  const Outcome o = run_cli({"area", "75", "68", "51", "40", "--diagonal", "77", "--format", "json"});
  ASSERT_EQ(o.status, kExitOk) << o.err;
  const auto report = nlohmann::json::parse(o.out)["report"];
  EXPECT_EQ(report["split_area"]["coefficient"]["num"], "3234");
  EXPECT_EQ(report["perpendiculars"][0]["coefficient"]["num"], "60");
  EXPECT_EQ(report["perpendiculars"][1]["coefficient"]["num"], "24");
  EXPECT_EQ(report["cyclic"], true);
}

TEST(Cli, AreaWithNonCyclicDiagonal) {
  // The 85 diagonal on this order separates (51, 40) from (75, 68): not right
  // triangles, and the two halves are incommensurable.
  const Outcome o = run_cli({"area", "51", "40", "75", "68", "--diagonal", "85", "--format", "json"});
  ASSERT_EQ(o.status, kExitOk) << o.err;
  const auto report = nlohmann::json::parse(o.out)["report"];
  EXPECT_EQ(report["cyclic"], false);
  EXPECT_TRUE(report["split_area"].is_string());
  EXPECT_EQ(report["oracle"]["concyclic"], false);
}

TEST(Cli, Construct) {
  const Outcome o = run_cli({"construct", "3", "4", "5", "8", "15", "17"});
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_NE(o.out.find("sides             51, 40, 75, 68"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("split_area        3234"), std::string::npos);

  const Outcome same = run_cli({"construct", "3", "4", "5", "3", "4", "5"});
  EXPECT_NE(same.out.find("split_area        300"), std::string::npos) << same.out;
}

TEST(Cli, Rhombus) {
  const Outcome a = run_cli({"rhombus", "--triple", "15", "20", "25"});
  EXPECT_EQ(a.status, kExitOk);
  EXPECT_NE(a.out.find("d2              40"), std::string::npos) << a.out;
  EXPECT_NE(a.out.find("area            600"), std::string::npos);
  EXPECT_NE(a.out.find("square_area     625"), std::string::npos);

  const Outcome b = run_cli({"rhombus", "--triple", "7", "24", "25"});
  EXPECT_NE(b.out.find("d1              14"), std::string::npos) << b.out;
  EXPECT_NE(b.out.find("area            336"), std::string::npos);

  EXPECT_EQ(run_cli({"rhombus", "25", "30"}).status, kExitOk);
}

TEST(Cli, Scan) {
  const Outcome o = run_cli({"scan", "25", "25", "25", "25", "--digits", "20"});
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_NE(o.out.find("argmax_diagonal  35.35"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("max_area         624.99"), std::string::npos);
}

TEST(Cli, Triples) {
  const Outcome o = run_cli({"triples", "25", "--pairs"});
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_EQ(o.out, "(7, 24, 25) (15, 20, 25)\n");
  EXPECT_EQ(run_cli({"triples", "5"}).out, "(3, 4, 5)\n");
}

TEST(Cli, DomainErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "3", "4", "6", "8", "15", "17"},
           {"rhombus", "25", "50"},
           {"scan", "1", "1", "1", "3"},
           {"area", "1", "2", "3"},
           {"area", "51", "68", "75", "40", "--diagonal", "200"},
           {"area", "1", "x", "3"},
       }) {
    const Outcome o = run_cli(args);
    EXPECT_EQ(o.status, kExitUsage) << args[0];
    EXPECT_FALSE(o.err.empty());
  }
  EXPECT_NE(run_cli({"area", "1", "2", "3"}).err.find("triangle inequality"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"area", "1", "2"},
           {"reproduce", "--format", "xml"},
           {"reproduce", "--digits", "5"},
           {"area", "3", "4", "5", "--format", "svg"},
           {"rhombus", "25"},
           {"rhombus"},
       }) {
    EXPECT_EQ(run_cli(args).status, kExitUsage) << (args.empty() ? "" : args[0]);
  }
}

TEST(Cli, ReproducePasses) {
  const Outcome o = run_cli({"reproduce"});
  EXPECT_EQ(o.status, kExitOk) << o.out;
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  const Outcome low = run_cli({"reproduce", "--digits", "10"});
  EXPECT_EQ(low.status, kExitOk) << low.out;
}

TEST(Cli, CorruptedManifestFails) {
  auto cases = manifest_cases();
  ASSERT_FALSE(cases.empty());
  for (const auto& c : cases) EXPECT_FALSE(c.provenance.empty()) << c.id;
  const auto it = std::find_if(cases.begin(), cases.end(), [](const auto& c) { return c.id == "worked.split_area"; });
  ASSERT_NE(it, cases.end());
  it->expected = ExactScalar(3233);
  std::ostringstream out;
  EXPECT_EQ(cmd_reproduce(RunConfig{}, cases, out), kExitManifestFailure);
  EXPECT_NE(out.str().find("FAIL  worked.split_area"), std::string::npos);
}

TEST(Cli, ReproduceJsonIsDeterministic) {
  const Outcome a = run_cli({"reproduce", "--format", "json"});
  const Outcome b = run_cli({"reproduce", "--format", "json"});
  EXPECT_EQ(a.status, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["command"], "reproduce");
  EXPECT_EQ(doc["summary"]["passed"], doc["summary"]["total"]);
  for (const auto& e : doc["entries"]) EXPECT_EQ(e["status"], "pass") << e["id"];
}

TEST(Cli, GoldenJson) {
  EXPECT_EQ(run_cli({"construct", "3", "4", "5", "8", "15", "17", "--format", "json", "--digits", "20"}).out,
            golden("construct_3_4_5_8_15_17.json"));
  EXPECT_EQ(run_cli({"area", "14", "12", "9", "13", "--format", "json", "--digits", "20"}).out,
            golden("area_14_12_9_13.json"));
}

TEST(Cli, GoldenSvg) {
  EXPECT_EQ(run_cli({"scan", "25", "25", "25", "25", "--steps", "99", "--format", "svg"}).out,
            golden("scan_square_25.svg"));
  EXPECT_EQ(run_cli({"scan", "75", "40", "51", "68", "--steps", "99", "--format", "svg"}).out,
            golden("scan_75_40_51_68.svg"));
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = testing::TempDir() + "mensura_out.svg";
  const Outcome o = run_cli({"scan", "25", "25", "25", "25", "--steps", "99", "--format", "svg", "--out", path});
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(read_file(path), golden("scan_square_25.svg"));
  std::remove(path.c_str());
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(run_binary("area 3 4 5").first, 0);
  EXPECT_EQ(run_binary("rhombus 25 50").first, 2);
  EXPECT_EQ(run_binary("--nope").first, 2);
  const auto [status, out] = run_binary("reproduce --digits 12");
  EXPECT_EQ(status, 0);
  EXPECT_NE(out.find("entries passed"), std::string::npos);
}
