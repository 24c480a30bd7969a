#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "chargraph/cli.hpp"

namespace chargraph {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, {in, out, err});
  return {code, out.str(), err.str()};
}

std::string data_path(const std::string& rel) { return std::string(CHARGRAPH_DATA_DIR) + "/" + rel; }

TEST(Cli, ClassifyJson) {
  const auto r = run_cli({"classify-f", "14", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["case"], "III");
  EXPECT_EQ(j["sizes"], json::array({3, 3}));
  EXPECT_EQ(j["pi_minus"], json::array({3, 43, 127}));
  EXPECT_EQ(j["pi_plus"], json::array({5, 29, 113}));
}

TEST(Cli, ClassifyTableForCaseNone) {
  const auto r = run_cli({"classify-f", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("None"), std::string::npos) << r.out;
}

TEST(Cli, ScanEvenFive) {
  const auto r = run_cli({"scan", "evenfive", "--max", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("counterexamples: 0"), std::string::npos);
  EXPECT_NE(r.out.find("hits: 3"), std::string::npos);

  const auto j = json::parse(run_cli({"scan", "evenfive", "--max", "12", "--format", "json"}).out);
  std::vector<unsigned> fs;
  for (const auto& row : j["rows"]) fs.push_back(row["f"].get<unsigned>());
  EXPECT_EQ(fs, (std::vector<unsigned>{6, 9, 11}));
  EXPECT_EQ(j["counterexamples"], 0);
}

TEST(Cli, ScanDefaults) {
  EXPECT_EQ(run_cli({"scan", "interest"}).code, 0);
  EXPECT_EQ(run_cli({"scan", "oddfour"}).code, 0);
  EXPECT_NE(run_cli({"scan", "cases", "--max", "15"}).out.find("III"), std::string::npos);
  EXPECT_EQ(run_cli({"scan", "cases", "--max", "64"}).code, 2);
  EXPECT_EQ(run_cli({"scan", "oddfour", "--max", "100001"}).code, 2);
  EXPECT_EQ(run_cli({"scan", "bogus"}).code, 2);
}

TEST(Cli, IsoPipeline) {
  const auto k5 = run_cli({"parse-shape", "K5"});
  ASSERT_EQ(k5.code, 0);
  const auto r = run_cli({"iso", "-", "psl2-graph"}, k5.out);
  EXPECT_EQ(r.code, 2);  // second operand is neither a file nor a shape

  const auto psl = run_cli({"psl2-graph", "4"});
  ASSERT_EQ(psl.code, 0);
  const auto no = run_cli({"iso", "-", json::parse(psl.out).dump()}, k5.out);
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "not isomorphic\n");

  const auto yes = run_cli({"iso", "-", "K1 + K1 + K1"}, psl.out);
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out.rfind("isomorphic:", 0), 0u) << yes.out;
}

TEST(Cli, IsoAcceptsFilesAndShapes) {
  const auto r = run_cli({"iso", data_path("graphs/c4.json"), "K2^c * K2^c"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({"parse-shape", "K3 +"}).code, 2);
  EXPECT_NE(run_cli({"parse-shape", "K3 +"}).err.find("offset 4"), std::string::npos);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"classify-f", "14", "--colour"}).code, 2);
  EXPECT_EQ(run_cli({"classify-f", "14", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run_cli({"classify-f", "14", "--format", "dot"}).code, 2);
  EXPECT_EQ(run_cli({"factor", "0"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"iso", "-", "K1"}, "{not json").code, 2);
}

TEST(Cli, FactorAndPi) {
  EXPECT_EQ(run_cli({"factor", "63"}).out, "63 = 3^2 * 7\n");
  EXPECT_EQ(run_cli({"pi", "63"}).out, "pi(63) = {3,7}\n");
  EXPECT_EQ(run_cli({"zsigmondy", "2", "6"}).out, "zsigmondy(2, 6) = none\n");
  const json j = json::parse(run_cli({"zsigmondy", "2", "12", "--format", "json"}).out);
  EXPECT_EQ(j["prime"], 13);
}

TEST(Cli, JsonRoundTrip) {
  const auto shape = run_cli({"parse-shape", "(K2 + K1 + K2) * K2^c"});
  ASSERT_EQ(shape.code, 0);
  const json j = json::parse(shape.out);
  EXPECT_EQ(j["shape"], "(K2 + K1 + K2) * K2^c");
  const CharGraph g = graph_from_json(j);
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  EXPECT_EQ(g, eval_shape("(K2 + K1 + K2) * K2^c"));

  const auto psl = json::parse(run_cli({"psl2-graph", "64"}).out);
  EXPECT_EQ(graph_from_json(psl), graph_psl2(64));
  EXPECT_EQ(psl["dot"], to_dot(graph_psl2(64)));
}

TEST(Cli, DotFormat) {
  const auto r = run_cli({"psl2-graph", "4", "--format", "dot"});
  EXPECT_EQ(r.out, "graph \"Delta\" {\n  2;\n  3;\n  5;\n}\n");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"scan", "oddfour", "--format", "json"},
      {"verify-main", "--f", "6", "--format", "json"},
      {"iso", "K3^c * C4", "C4 * K3^c"},
      {"factor", "9223372036854775809"},
  };
  for (const auto& cmd : commands) EXPECT_EQ(run_cli(cmd).out, run_cli(cmd).out);
}

TEST(Cli, VerifyMainSyntheticAndBundledRadicals) {
  const auto r = run_cli({"verify-main", "--f", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["radical"], json::parse(R"([{"degrees":[1,11,17]}])"));

  std::size_t checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("radicals"))) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("f", 0) != 0 || name.find("_") != std::string::npos) continue;
    const std::string f = std::to_string(std::stoi(name.substr(1, 2)));
    const auto v = run_cli({"verify-main", "--f", f, "--radical", entry.path().string()});
    EXPECT_EQ(v.code, 0) << name << "\n" << v.out << v.err;
    ++checked;
  }
  EXPECT_EQ(checked, 11u);

  const auto model = run_cli({"verify-main", "--f", "6", "--radical", data_path("radicals/f06_model.json")});
  EXPECT_EQ(model.code, 0) << model.err;
}

TEST(Cli, VerifyMainValidationFailure) {
  const auto r = run_cli(
      {"verify-main", "--f", "6", "--radical", data_path("radicals/invalid_f06_socle_prime.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("violation: radical factor 0: prime 13"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"verify-main", "--f", "4"}).code, 2);
}

TEST(Cli, CheckSolvable) {
  EXPECT_EQ(run_cli({"check-solvable", data_path("degrees/s4.json")}).code, 0);
  const auto path = run_cli({"check-solvable", data_path("degrees/p4_path.json")});
  EXPECT_EQ(path.code, 1);
  EXPECT_NE(path.out.find("solvable shape: FAIL"), std::string::npos);
  const auto wide = run_cli({"check-solvable", "-"}, R"({"degrees":[1,2,3,5,7,11,13,17,19]})");
  EXPECT_EQ(wide.code, 1);
  EXPECT_NE(wide.err.find("warning: K4-free graph with 8 vertices"), std::string::npos);
}

}  // namespace
}  // namespace chargraph
