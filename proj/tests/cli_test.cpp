#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "morphud/conllu.hpp"

namespace morphud {
namespace {

namespace fs = std::filesystem;

std::string data_path(const std::string& name) { return std::string(MORPHUD_TEST_DATA_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("morphud_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv("MORPHUD_TAGMAP");
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"eval", data_path("golden_word.conllu")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"analyze", "--json", "--tsv", "a", "b"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"analyze", "--filter", "some", "a", "b"}).code, cli::kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("w2m"), std::string::npos);
}

TEST_F(CliTest, MissingTagMapIsAUsageError) {
  const auto r = run({"w2m", data_path("golden_word.conllu"), path("o.conllu")});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("MORPHUD_TAGMAP"), std::string::npos);
}

TEST_F(CliTest, TagMapFromEnvironment) {
  setenv("MORPHUD_TAGMAP", "sejong", 1);
  const auto r = run({"w2m", data_path("golden_word.conllu"), path("o.conllu")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1 sentences, 12 words, 21 morphemes\n");
  EXPECT_EQ(read_conllu_file(path("o.conllu")).at(0).size(), 21u);
}

TEST_F(CliTest, DataErrorsExitOne) {
  std::ofstream(path("bad.conllu")) << "1\ta\ta\tX\tX\t_\t0\troot\t_\n";
  auto r = run({"validate", path("bad.conllu")});
  EXPECT_EQ(r.code, cli::kExitDataError);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  r = run({"eval", data_path("golden_word.conllu"), path("missing.conllu")});
  EXPECT_EQ(r.code, cli::kExitDataError);
  r = run({"w2m", "--tagmap", "/nonexistent.map", data_path("golden_word.conllu"), path("o")});
  EXPECT_EQ(r.code, cli::kExitDataError);
  r = run({"eval", data_path("golden_word.conllu"), data_path("ko_gsd-sample.conllu")});
  EXPECT_EQ(r.code, cli::kExitDataError);
}

TEST_F(CliTest, StdoutDataMovesReportToStderr) {
  const auto r = run({"w2m", "--tagmap", "sejong", data_path("golden_word.conllu"), "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_conllu(r.out).at(0).size(), 21u);
  EXPECT_EQ(r.err, "1 sentences, 12 words, 21 morphemes\n");
}

TEST_F(CliTest, RoundTripThroughFiles) {
  const auto word = data_path("ko_gsd-sample.conllu");
  ASSERT_EQ(run({"w2m", "--tagmap", "sejong", word, path("m.conllu")}).code, 0);
  const auto r = run({"m2w", "--skeleton", word, "--repair-report", path("rep.tsv"),
                      path("m.conllu"), path("w.conllu")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(", 0 repairs"), std::string::npos);
  EXPECT_EQ(slurp(path("w.conllu")), slurp(word));
  EXPECT_EQ(slurp(path("rep.tsv")).rfind("repairs\t0\n", 0), 0u);
  const auto e = run({"eval", word, path("w.conllu")});
  EXPECT_EQ(e.out.substr(0, e.out.find('\n')), "LAS=1.0000 UAS=1.0000");
}

TEST_F(CliTest, EvalJson) {
  const auto f = data_path("golden_word.conllu");
  const auto r = run({"eval", "--json", f, f});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 12);
  EXPECT_EQ(j["las"], 1.0);
}

TEST_F(CliTest, AnalyzeJsonKeys) {
  const auto f = data_path("golden_word.conllu");
  const auto r = run({"analyze", "--json", "--filter", "all", "--depth-cap", "3", f, f});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"total", "uas", "las", "filter", "depth_cap", "depth_convention",
                          "direction_labels", "direction_matrix", "depth_matrix"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["depth_matrix"].size(), 4u);
  EXPECT_EQ(j["direction_matrix"][2][2], 1);
}

TEST_F(CliTest, AnalyzeTsv) {
  const auto f = data_path("golden_word.conllu");
  const auto r = run({"analyze", "--tsv", f, f});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("matrix\tgold\tsystem\tcount\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 9 + 121);
}

TEST_F(CliTest, ExportCorpus) {
  const auto r = run({"export-corpus", "--mode", "morpheme", data_path("golden_word.conllu")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), ' '), 20);
  EXPECT_EQ(r.err, "1 lines, 21 tokens\n");
}

TEST_F(CliTest, ValidateSeveralFiles) {
  const auto r = run({"validate", data_path("golden_word.conllu"), data_path("ko_kaist-sample.conllu")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("golden_word.conllu: OK (1 sentences, 12 tokens)"), std::string::npos);
}

}  // namespace
}  // namespace morphud
