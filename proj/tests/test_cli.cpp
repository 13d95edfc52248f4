#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ballot/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ballotgf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ballot::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BALLOT_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, BallotCsv) {
  const auto r = run({"table", "--stat", "b", "--n", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n,d,count\n5,0,1\n5,1,22\n5,2,22\n");
}

TEST(Cli, FirstLetterJson) {
  const auto r = run({"table", "--stat", "A_first", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["stat"], "A_first");
  EXPECT_EQ(j["n"], 3);
  ASSERT_EQ(j["entries"].size(), 5u);
  EXPECT_EQ(j["entries"][2], (nlohmann::json{{"d", 1}, {"j", 2}, {"count", "2"}}));

  const auto o = run({"oracle", "--stat", "A_first", "--n", "3"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(nlohmann::json::parse(o.out)["entries"], j["entries"]);
}

TEST(Cli, EmptyPermutation) {
  const auto r = run({"table", "--stat", "A", "--n", "0", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,d,count\n0,0,1\n");
}

TEST(Cli, CsvAndJsonCarryTheSameData) {
  for (const char* stat : {"A", "A_first", "U", "E", "b", "l", "p", "b_factor"}) {
    const auto js = run({"table", "--stat", stat, "--n", "5"});
    const auto cs = run({"table", "--stat", stat, "--n", "5", "--format", "csv"});
    ASSERT_EQ(js.code, 0) << stat << js.err;
    ASSERT_EQ(cs.code, 0) << stat;
    std::istringstream lines(cs.out);
    std::string header, line;
    std::getline(lines, header);
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    const auto entries = nlohmann::json::parse(js.out)["entries"];
    ASSERT_EQ(rows.size(), entries.size()) << stat;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::string expect = "5," + std::to_string(entries[k]["d"].get<int>());
      if (entries[k].contains("i")) expect += "," + std::to_string(entries[k]["i"].get<int>());
      if (entries[k].contains("j")) expect += "," + std::to_string(entries[k]["j"].get<int>());
      expect += "," + entries[k]["count"].get<std::string>();
      EXPECT_EQ(rows[k], expect) << stat;
    }
  }
}

TEST(Cli, BigCountsAreDecimalStrings) {
  const auto r = run({"table", "--stat", "A", "--n", "25"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["entries"][12]["count"], "4179647109945703200884716");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"table", "--stat", "zz", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"table", "--stat", "l", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"table", "--stat", "b", "--n", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"table", "--n", "3"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--order", "0"}).code, 2);
  EXPECT_EQ(run({"dump", "--stat", "Q", "--order", "3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Caps) {
  EXPECT_EQ(run({"verify", "--order", "15"}).code, 2);
  EXPECT_EQ(run({"oracle", "--stat", "b", "--n", "11"}).code, 2);
  EXPECT_EQ(run({"table", "--stat", "b", "--n", "15"}).code, 2);
  EXPECT_EQ(run({"table", "--stat", "b", "--n", "15", "--force"}).code, 0);
  EXPECT_EQ(run({"dump", "--stat", "F", "--order", "15"}).code, 2);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--order", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 8u);
  for (const auto& rep : j) EXPECT_TRUE(rep["passed"].get<bool>()) << rep.dump();

  EXPECT_EQ(run({"verify", "--order", "1"}).code, 0);

  const auto bad = run({"verify", "--order", "8", "--inject-mutation", "b:5:1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("bdn"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(bad.out)[0]["discrepancy"]["location"], "total: n=5");
  EXPECT_EQ(run({"verify", "--order", "8", "--inject-mutation", "b:5"}).code, 2);
}

TEST(Cli, Dump) {
  const auto r = run({"dump", "--stat", "B", "--order", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "t^0 x^0 y^0 z^0 : 1/1\n"
            "t^0 x^1 y^0 z^0 : 1/1\n"
            "t^0 x^2 y^0 z^0 : 1/2\n"
            "t^0 x^3 y^0 z^0 : 1/6\n"
            "t^1 x^3 y^0 z^0 : 1/3\n");
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "ballotgf_cli_test.csv";
  const auto r = run({"table", "--stat", "b", "--n", "4", "--format", "csv", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "n,d,count\n4,0,1\n4,1,8\n");
  std::filesystem::remove(path);
}

TEST(Cli, Oeis) {
  EXPECT_EQ(run({"oeis", "--oeis-bfile", data("b008292.txt")}).code, 0);
  EXPECT_EQ(run({"oeis", "--oeis-bfile", data("empty.txt")}).code, 0);
  const auto bad = run({"oeis", "--oeis-bfile", data("b008292_altered.txt")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("index 21"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"oeis", "--oeis-bfile", data("malformed.txt")}).code, 2);
  EXPECT_EQ(run({"oeis", "--oeis-bfile", data("missing.txt")}).code, 2);
}
