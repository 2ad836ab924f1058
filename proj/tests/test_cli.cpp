#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(HCLUSTER_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args) {
  const Result r = run(args + " --format json");
  EXPECT_EQ(r.code, 0) << args;
  return json::parse(r.out);
}

TEST(Cli, Indecs) {
  EXPECT_EQ(run_json("indecs --n 1 --d 1 --count")["count"], 2);
  EXPECT_EQ(run_json("indecs --n 3 --d 3 --count")["count"], 25);
  EXPECT_EQ(run("indecs --n 1 --d 1 --format table").out, "1,3\n2,4\n");
  EXPECT_EQ(run_json("indecs --n 1 --d 1")["indecs"], json::parse("[[1,3],[2,4]]"));
}

TEST(Cli, Tiltings) {
  EXPECT_EQ(run_json("tiltings --n 2 --d 1")["tiltings"].size(), 5u);
  EXPECT_EQ(run_json("tiltings --n 1 --d 1")["tiltings"].size(), 2u);
  EXPECT_EQ(run_json("tiltings --n 3 --d 3 --limit 1")["tiltings"].size(), 1u);
}

TEST(Cli, TiltingListingRoundTrips) {
  const json all = run_json("tiltings --n 2 --d 2");
  const auto dir = std::filesystem::temp_directory_path();
  int i = 0;
  for (const auto& t : all["tiltings"]) {
    const auto path = dir / ("hcluster_cli_tilting_" + std::to_string(i++) + ".json");
    std::ofstream(path) << t.dump();
    const std::string object = std::to_string(t[0][0].get<int>()) + "," + std::to_string(t[0][1].get<int>()) +
                               "," + std::to_string(t[0][2].get<int>());
    const json idx = run_json("index --n 2 --d 2 --tilting " + path.string() + " --object " + object);
    EXPECT_EQ(idx["route"], "summand");
    EXPECT_EQ(idx["index"].size(), 1u);
    const json inline_idx = run_json("index --n 2 --d 2 --tilting '" + t.dump() + "' --object " + object);
    EXPECT_EQ(inline_idx, idx);
    std::filesystem::remove(path);
  }
}

TEST(Cli, IndexGolden) {
  const json j = run_json("index --n 3 --d 3 --tilting contains:3 --object 4,6,8,10");
  EXPECT_EQ(j["index"], json::parse(R"({"3,5,7,9":-1,"3,5,7,10":1,"3,5,8,10":-1,"3,6,8,10":1})"));
  EXPECT_EQ(j["route"], "staircase");
}

TEST(Cli, IndexErrors) {
  EXPECT_EQ(run("index --n 3 --d 3 --tilting contains:3 --object 1,2").code, 4);
  EXPECT_EQ(run("index --n 1 --d 1 --tilting '[[1,3],[2,4]]' --object 1,3").code, 5);
  EXPECT_EQ(run("index --n 1 --d 1 --tilting '[[1,3]' --object 1,3").code, 2);
  EXPECT_EQ(run("index --n 3 --d 3 --object 4,6,8,10").code, 2);
  EXPECT_EQ(run("index --n 0 --d 3 --tilting contains:3 --object 4,6,8,10").code, 2);
}

TEST(Cli, CVectors) {
  const json j = run_json("cvectors --n 3 --d 3 --tilting-t contains:1 --tilting-u contains:3 --u 3,5,8,10");
  EXPECT_EQ(j["values"]["1,4,6,9"], -1);
  EXPECT_EQ(j["values"]["1,5,7,9"], 1);
  EXPECT_EQ(j["sign"], "Mixed");
  const json id = run_json("cvectors --n 2 --d 1 --tilting-t '[[1,3],[1,4]]' --tilting-u '[[1,3],[1,4]]'");
  EXPECT_EQ(id["c_matrix"], json::parse("[[1,0],[0,1]]"));
}

TEST(Cli, CMatrixIsInverseTransposeAtPentagon) {
  const std::string t = "'[[1,3],[1,4]]'";
  const std::vector<std::string> basis_t = {"1,3", "1,4"};
  const std::vector<std::string> basis_u = {"2,4", "2,5"};
  std::vector<std::vector<long long>> g;
  for (const auto& u : basis_u) {
    const json idx = run_json("index --n 2 --d 1 --tilting " + t + " --object " + u)["index"];
    std::vector<long long> row;
    for (const auto& b : basis_t) row.push_back(idx.value(b, 0LL));
    g.push_back(row);
  }
  const auto inv = oracle::inverse(g);
  const json c = run_json("cvectors --n 2 --d 1 --tilting-t " + t + " --tilting-u '[[2,4],[2,5]]'")["c_matrix"];
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      ASSERT_EQ(inv[j][i].den, 1);
      EXPECT_EQ(c[i][j].get<long long>(), inv[j][i].num);
    }
}

TEST(Cli, Mutations) {
  const json j = run_json("mutations --n 2 --d 1 --tilting '[[1,3],[1,4]]' --u 1,3");
  EXPECT_EQ(j["mutations"], json::parse("[[2,4]]"));
  EXPECT_EQ(j["is_exchange_pair"], true);
  const json k = run_json("mutations --n 3 --d 3 --tilting contains:3 --u 3,5,8,10");
  EXPECT_EQ(k["is_mutable"], false);
}

TEST(Cli, Check) {
  const json j = run_json("check --suite duality --n 2 --d 1");
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["reports"][0]["suite"], "duality");
  EXPECT_EQ(run("check --suite nope").code, 2);
  EXPECT_EQ(run_json("check --suite counterexample")["reports"].size(), 1u);
}

TEST(Cli, Counterexample) {
  const json j = run_json("counterexample");
  EXPECT_EQ(j["status"], "Passed");
}

TEST(Cli, OutputFileDefaultsToJson) {
  const auto path = std::filesystem::temp_directory_path() / "hcluster_cli_out.json";
  EXPECT_EQ(run("indecs --n 2 --d 1 --count --output " + path.string()).code, 0);
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["count"], 5);
  std::filesystem::remove(path);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("indecs --n 1 --d 1 --format xml").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
