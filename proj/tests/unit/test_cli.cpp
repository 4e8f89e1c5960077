#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "nbnn/cli/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = nbnn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NBNN_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Compares against a frozen report; NBNN_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(NBNN_TEST_GOLDEN_DIR) / name;
  if (std::getenv("NBNN_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << actual;
  }
  ASSERT_TRUE(fs::exists(path)) << path;
  EXPECT_EQ(slurp(path), actual) << "golden mismatch: " << name;
}

const std::vector<std::string> kSmallSimulate{
    "simulate", "--design", "location", "--alpha", "0.1", "--trials", "3", "--seed", "7",
    "--methods", "proposed,knn", "--train-size", "200", "--test-size", "100"};

TEST(CliSimulate, SchemaShape) {
  const auto r = run(kSmallSimulate);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["design"], "location");
  EXPECT_EQ(doc["alpha"], 0.1);
  EXPECT_EQ(doc["trials"], 3);
  EXPECT_EQ(doc["seed"], 7);
  ASSERT_EQ(doc["methods"].size(), 2u);
  EXPECT_EQ(doc["methods"][0]["name"], "proposed");
  EXPECT_EQ(doc["methods"][1]["name"], "knn");
  for (const auto& m : doc["methods"]) {
    for (const char* key : {"precision", "recall", "f1"}) {
      ASSERT_TRUE(m[key].contains("mean"));
      ASSERT_TRUE(m[key].contains("se"));
      EXPECT_GE(m[key]["mean"].get<double>(), 0.0);
      EXPECT_LE(m[key]["mean"].get<double>(), 1.0);
    }
  }
  expect_golden("simulate_location.json", r.out);
}

TEST(CliSimulate, ByteIdenticalAcrossRunsAndJobs) {
  const auto a = run(kSmallSimulate);
  const auto b = run(kSmallSimulate);
  auto args = kSmallSimulate;
  args.insert(args.end(), {"--jobs", "4"});
  const auto c = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(CliSimulate, UnknownMethodIsUsageError) {
  const auto r = run({"simulate", "--design", "location", "--alpha", "0.1", "--methods", "foo"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("proposed, knn, wnn, bayes"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliSimulate, InvalidArgumentsAreUsageErrors) {
  EXPECT_EQ(run({"simulate", "--design", "circle", "--alpha", "0.1"}).code, 2);
  EXPECT_EQ(run({"simulate", "--design", "location", "--alpha", "0.7"}).code, 2);
  EXPECT_EQ(run({"simulate", "--design", "location", "--alpha", "0"}).code, 2);
  EXPECT_EQ(run({"simulate", "--design", "location", "--alpha", "0.1", "--trials", "0"}).code, 2);
  EXPECT_EQ(run({"simulate", "--design", "location", "--alpha", "0.1", "--bogus"}).code, 2);
  EXPECT_EQ(run({"simulate", "--design", "scale", "--alpha", "0.1", "--minority", "tall"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliSimulate, TableAndOutputFile) {
  const fs::path out = fs::temp_directory_path() / "nbnn_cli_table.json";
  fs::remove(out);
  auto args = kSmallSimulate;
  args.insert(args.end(), {"--table", "--output", out.string()});
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("proposed"), std::string::npos);
  EXPECT_NE(r.out.find("("), std::string::npos);
  EXPECT_EQ(slurp(out), run(kSmallSimulate).out);
  fs::remove(out);
}

TEST(CliBenchmark, BinaryFixture) {
  const auto r = run({"benchmark", "--input", data("binary.csv"), "--label-column", "status",
                      "--trials", "10", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  ASSERT_EQ(doc["methods"].size(), 3u);
  EXPECT_EQ(doc["methods"][0]["name"], "proposed");
  EXPECT_EQ(doc["methods"][1]["name"], "knn");
  EXPECT_EQ(doc["methods"][2]["name"], "wnn");
  EXPECT_EQ(doc["classes"][1]["name"], "positive");
  EXPECT_EQ(doc["classes"][1]["test"], 10);
  EXPECT_EQ(doc["classes"][0]["test"], 10);
  EXPECT_EQ(doc["classes"][0]["train"], 150);
  expect_golden("benchmark_binary.json", r.out);
}

TEST(CliBenchmark, ThreeClassFixtureUsesReductions) {
  const auto r = run({"benchmark", "--input", data("three_class.csv"), "--label-column", "species",
                      "--trials", "5", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  std::vector<std::string> names;
  for (const auto& m : doc["methods"]) names.push_back(m["name"]);
  EXPECT_EQ(names, (std::vector<std::string>{"ovo_plus", "ovr_plus", "knn", "wnn"}));
  for (const auto& n : names) EXPECT_TRUE(doc["efficiency"]["f1"].contains(n));
}

TEST(CliBenchmark, ByteIdenticalAcrossJobs) {
  const std::vector<std::string> base{"benchmark", "--input", data("three_class.csv"),
                                      "--label-column", "species", "--trials", "4"};
  auto par = base;
  par.insert(par.end(), {"--jobs", "3"});
  EXPECT_EQ(run(base).out, run(par).out);
}

TEST(CliBenchmark, Errors) {
  EXPECT_EQ(run({"benchmark", "--input", data("binary.csv"), "--label-column", "status",
                 "--trials", "0"}).code, 2);
  EXPECT_EQ(run({"benchmark", "--input", data("binary.csv"), "--label-column", "nope"}).code, 3);
  EXPECT_EQ(run({"benchmark", "--input", data("missing.csv"), "--label-column", "status"}).code, 3);
  EXPECT_EQ(run({"benchmark", "--input", data("three_class.csv"), "--label-column", "species",
                 "--methods", "proposed"}).code, 2);
}

TEST(CliFitPredict, InSamplePredictions) {
  const auto r = run({"fit-predict", "--train", data("binary.csv"), "--query", data("binary.csv"),
                      "--label-column", "status"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "prediction");
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_TRUE(line == "negative" || line == "positive") << line;
    ++rows;
  }
  EXPECT_EQ(rows, 200);
}

TEST(CliFitPredict, EvidenceColumns) {
  const auto r = run({"fit-predict", "--train", data("binary.csv"), "--query", data("binary.csv"),
                      "--label-column", "status", "--emit-evidence"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "prediction,E1,E2");
  std::getline(lines, line);
  const auto c1 = line.find(',');
  const auto c2 = line.find(',', c1 + 1);
  ASSERT_NE(c2, std::string::npos);
  EXPECT_GE(std::stod(line.substr(c1 + 1, c2 - c1 - 1)), 0.5);
  EXPECT_GE(std::stod(line.substr(c2 + 1)), 0.5);

  const auto m = run({"fit-predict", "--train", data("three_class.csv"), "--query",
                      data("three_class.csv"), "--label-column", "species", "--emit-evidence",
                      "--method", "ovo_plus"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.out.substr(0, m.out.find('\n')),
            "prediction,evidence_setosa,evidence_versicolor,evidence_virginica");
}

TEST(CliFitPredict, ExtraQueryColumnIsError) {
  const fs::path q = fs::temp_directory_path() / "nbnn_cli_extra.csv";
  std::ofstream(q) << "x1,x2,x3,x4\n0,0,0,0\n";
  const auto r = run({"fit-predict", "--train", data("binary.csv"), "--query", q.string(),
                      "--label-column", "status"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("x4"), std::string::npos) << r.err;
  fs::remove(q);
}

TEST(CliSplit, ManifestIsDisjointAndBalanced) {
  const auto r = run({"split", "--input", data("three_class.csv"), "--label-column", "species",
                      "--trials", "2", "--seed", "9"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  ASSERT_EQ(doc["trials"].size(), 2u);
  for (const auto& t : doc["trials"]) {
    EXPECT_EQ(t["test"].size(), 30u);  // round(0.25 * 40) per class
    EXPECT_EQ(t["train"].size() + t["test"].size(), 190u);
  }
}

TEST(CliAtomicWrite, ReplacesTargetWithoutLeftovers) {
  const fs::path dir = fs::temp_directory_path() / "nbnn_atomic";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto target = (dir / "out.json").string();
  nbnn::cli::write_atomically(target, "first");
  nbnn::cli::write_atomically(target, "second");
  EXPECT_EQ(slurp(target), "second");
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
  EXPECT_ANY_THROW(nbnn::cli::write_atomically((dir / "no" / "such" / "x").string(), "x"));
  fs::remove_all(dir);
}

TEST(CliFailures, NoPartialOutputFileOnError) {
  const fs::path out = fs::temp_directory_path() / "nbnn_cli_fail.json";
  fs::remove(out);
  const auto r = run({"benchmark", "--input", data("binary.csv"), "--label-column", "nope",
                      "--output", out.string()});
  EXPECT_NE(r.code, 0);
  EXPECT_FALSE(fs::exists(out));
}

}  // namespace
