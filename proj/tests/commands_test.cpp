#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "autgraph/commands.hpp"

using namespace autgraph;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run generate(GenerateOptions opt) {
  std::ostringstream out, err;
  int code = run_generate(opt, out, err);
  return {code, out.str(), err.str()};
}

Run verify(VerifyOptions opt) {
  std::ostringstream out, err;
  int code = run_verify(opt, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) { return std::count(text.begin(), text.end(), '\n'); }

}  // namespace

TEST(Generate, CycleTable) {
  auto r = generate({Family::biconn, 4, 1, 0, {}, {}, OutputFormat::table, "", 1});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 2u);
  EXPECT_NE(r.out.find("1/8"), std::string::npos);
}

TEST(Generate, SingleEdgeJson) {
  auto r = generate({Family::conn, 2, 0, 0, {}, {}, OutputFormat::json, "", 1});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0].at("coefficient"), "1/2");
}

TEST(Generate, TreesTable) {
  auto r = generate({Family::conn, 4, 0, 0, {}, {}, OutputFormat::table, "", 1});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 3u);
  EXPECT_NE(r.out.find("1/2"), std::string::npos);
  EXPECT_NE(r.out.find("1/6"), std::string::npos);
}

TEST(Generate, Errors) {
  EXPECT_EQ(generate({Family::conn, 4, 0, 0, 3, {}, OutputFormat::table, "", 1}).code, exit_usage);
  EXPECT_EQ(generate({Family::aux, 4, 2, 0, {}, {}, OutputFormat::table, "", 1}).code, exit_usage);
  auto r = generate({Family::conn, 1, 0, 0, {}, {}, OutputFormat::table, "", 1});
  EXPECT_EQ(r.code, exit_failure);
  EXPECT_NE(r.err.find("vertex number"), std::string::npos);
  EXPECT_EQ(generate({Family::two_edge, 4, 2, 0, 1, {}, OutputFormat::table, "", 1}).code, exit_failure);
}

TEST(Generate, BlockLimits) {
  auto r = generate({Family::two_edge, 5, 2, 0, 3, 1, OutputFormat::json, "", 1});
  EXPECT_EQ(r.code, 0);
  for (const auto& rec : json::parse(r.out)) {
    auto g = multigraph_from_json(rec);
    for (const auto& blk : block_decomposition(g).blocks) EXPECT_GE(blk.vertices.size(), 3u);
  }
}

TEST(Generate, DeterministicAcrossJobs) {
  for (Family f : {Family::biconn, Family::conn, Family::two_edge, Family::two_edge_cycles}) {
    auto a = generate({f, 4, 2, 1, {}, {}, OutputFormat::json, "", 1});
    auto b = generate({f, 4, 2, 1, {}, {}, OutputFormat::json, "", 8});
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Generate, EnvironmentOverridesCacheFlag) {
  auto flag_dir = fs::temp_directory_path() / "autgraph_flag_cache";
  auto env_dir = fs::temp_directory_path() / "autgraph_env_cache";
  fs::remove_all(flag_dir);
  fs::remove_all(env_dir);
  ::setenv("AUTGRAPH_CACHE", env_dir.c_str(), 1);
  auto r = generate({Family::conn, 3, 1, 0, {}, {}, OutputFormat::json, flag_dir.string(), 1});
  ::unsetenv("AUTGRAPH_CACHE");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(env_dir / "conn_n3_k1_s0.json"));
  EXPECT_FALSE(fs::exists(flag_dir));
  auto cached = generate({Family::conn, 3, 1, 0, {}, {}, OutputFormat::json, env_dir.string(), 1});
  EXPECT_EQ(cached.out, r.out);
  fs::remove_all(env_dir);
}

TEST(Verify, PassesAtOrderFive) {
  auto r = verify({5, 2, std::nullopt, OutputFormat::table, 20240601, 1});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Verify, JsonReport) {
  auto r = verify({4, 1, Family::biconn, OutputFormat::json, 1, 1});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_FALSE(j.at("beta").empty());
}

TEST(Verify, BoundErrors) {
  EXPECT_EQ(verify({99, 2, std::nullopt, OutputFormat::table, 1, 1}).code, exit_failure);
  EXPECT_EQ(verify({1, 2, std::nullopt, OutputFormat::table, 1, 1}).code, exit_failure);
  EXPECT_EQ(verify({4, 4, std::nullopt, OutputFormat::table, 1, 1}).code, exit_failure);
}

TEST(Verify, KeysCoverAuxBlocks) {
  auto keys = verification_keys({5, 0, Family::aux, OutputFormat::table, 1, 1});
  ASSERT_FALSE(keys.empty());
  for (const auto& k : keys) {
    EXPECT_GE(k.j, 2);
    EXPECT_LT(k.j, k.n);
    EXPECT_LE(k.j, k.k);
  }
}
