#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using nlohmann::json;
using testutil::ToolResult;

namespace {

std::string temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "perfreq_cli_tests";
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("verify exits 0 on a clean model") {
  ToolResult r = testutil::run_tool(
      "verify " + testutil::fixture_path("complete_model.csv"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("models checked: 1 (merged: 1)") != std::string::npos);
  CHECK(r.out.find("defects: 0 (0 blocking, 0 warnings)") != std::string::npos);
}

TEST_CASE("verify exits 1 and reports the full defect census") {
  ToolResult r = testutil::run_tool(
      "verify " + testutil::fixture_path("observatory_requirements.csv"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("models checked: 5 (merged: 5)") != std::string::npos);
  CHECK(r.out.find("defects: 24 (10 blocking, 14 warnings)") !=
        std::string::npos);
}

TEST_CASE("verify --json emits a parseable report") {
  ToolResult r = testutil::run_tool(
      "verify --json " + testutil::fixture_path("observatory_requirements.csv"));
  CHECK(r.exit_code == 1);
  json j = json::parse(r.out);
  CHECK(j["models_checked"] == 5);
  CHECK(j["merged_models"].size() == 5);
  CHECK(j["defects"].size() == 24);
  CHECK(j["blocking"] == 10);
  CHECK(j["warnings"] == 14);
  CHECK(j["defects"][0]["category"] == "infeasible_requirement");
}

TEST_CASE("verify --strict escalates warnings to a failing exit") {
  std::string path = testutil::fixture_path("warnings_only.csv");
  CHECK(testutil::run_tool("verify " + path).exit_code == 0);
  CHECK(testutil::run_tool("verify --strict " + path).exit_code == 1);
}

TEST_CASE("verify exits 2 on unusable input") {
  CHECK(testutil::run_tool("verify /no/such/file.csv").exit_code == 2);

  std::string bad = temp_dir() + "/bad_header.csv";
  testutil::write_file(bad, "id,name\n1,x\n");
  ToolResult r = testutil::run_tool("verify " + bad, /*keep_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("header") != std::string::npos);
}

TEST_CASE("verify surfaces row warnings on stderr but keeps going") {
  ToolResult r = testutil::run_tool(
      "verify " + testutil::fixture_path("observatory_requirements.csv"),
      /*keep_stderr=*/true);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("warning:") != std::string::npos);
  CHECK(r.out.find("PR10") != std::string::npos);
}

TEST_CASE("generate writes environment JSON to stdout") {
  ToolResult r = testutil::run_tool(
      "generate " + testutil::fixture_path("observatory_merged.csv"));
  CHECK(r.exit_code == 1);  // the source still has blocking defects
  json j = json::parse(r.out);
  CHECK(j["test_environments"].size() == 8);
}

TEST_CASE("generate -o writes the same bytes to a file") {
  std::string out_path = temp_dir() + "/envs.json";
  std::filesystem::remove(out_path);
  ToolResult direct = testutil::run_tool(
      "generate " + testutil::fixture_path("observatory_merged.csv"));
  ToolResult filed = testutil::run_tool(
      "generate -o " + out_path + " " +
      testutil::fixture_path("observatory_merged.csv"));
  CHECK(filed.exit_code == 1);
  CHECK(filed.out.empty());
  CHECK(testutil::read_file(out_path) == direct.out);
}

TEST_CASE("generate exits 0 when the model verifies clean") {
  ToolResult r = testutil::run_tool(
      "generate " + testutil::fixture_path("complete_model.csv"));
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["test_environments"].size() == 3);
}

TEST_CASE("generate exits 2 when the output path is unwritable") {
  ToolResult r = testutil::run_tool(
      "generate -o /no/such/dir/envs.json " +
      testutil::fixture_path("complete_model.csv"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("report summarizes a corpus directory") {
  ToolResult r =
      testutil::run_tool("report " + testutil::fixture_path("corpus"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Documents") != std::string::npos);
  CHECK(r.out.find("Under-specified throughput") != std::string::npos);
  CHECK(r.out.find("Test environments generated") != std::string::npos);
}

TEST_CASE("report --json carries the frozen corpus counts") {
  ToolResult r = testutil::run_tool(
      "report --json " + testutil::fixture_path("corpus"));
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["documents"] == 2);
  CHECK(j["requirements"] == 12);
  CHECK(j["not_quantifiable"] == 1);
  CHECK(j["not_quantified"] == 1);
  CHECK(j["under_specified_total"] == 11);
  CHECK(j["under_specified_by_aspect"]["speed_throughput"] == 4);
  CHECK(j["environments_generated"] == 9);
}

TEST_CASE("report skips unusable files with a note and exits 0") {
  std::string dir = temp_dir() + "/mixed_corpus";
  std::filesystem::create_directories(dir);
  testutil::write_file(dir + "/broken.csv", "not,a,model\nx,y,z\n");
  testutil::write_file(
      dir + "/good.csv",
      "model_id,object,condition,aspect,requirement_id,description,value,"
      "unit,comparator,quantifiable\n"
      "g1,portal,,time_behavior,T1,<= 1 sec,1,sec,<=,true\n");
  ToolResult r = testutil::run_tool("report --json " + dir,
                                    /*keep_stderr=*/true);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("warning: skipped") != std::string::npos);
  CHECK(r.out.find("broken.csv") != std::string::npos);
  auto brace = r.out.find('{');
  REQUIRE(brace != std::string::npos);
  json j = json::parse(r.out.substr(brace));
  CHECK(j["documents"] == 1);
  CHECK(j["requirements"] == 1);
}

TEST_CASE("report exits 2 on a missing directory") {
  ToolResult r = testutil::run_tool("report /no/such/corpus");
  CHECK(r.exit_code == 2);
}

TEST_CASE("suggest annotates each sentence with ranked aspects") {
  std::string path = temp_dir() + "/sentences.txt";
  testutil::write_file(path,
                       "The system shall respond in less than 1 second.\n"
                       "\n"
                       "zzz qqq\n");
  ToolResult r = testutil::run_tool("suggest " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("respond in less than 1 second") != std::string::npos);
  CHECK(r.out.find("time_behavior (") != std::string::npos);
  CHECK(r.out.find("(no match)") != std::string::npos);
}

TEST_CASE("suggest accepts a custom lexicon") {
  std::string lex = temp_dir() + "/lex.tsv";
  testutil::write_file(lex, "capacity\twidgets\n");
  std::string path = temp_dir() + "/sentences2.txt";
  testutil::write_file(path, "store 10 widgets\n");
  ToolResult r =
      testutil::run_tool("suggest --lexicon " + lex + " " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("capacity (1): widgets") != std::string::npos);

  testutil::write_file(lex, "no tab here\n");
  CHECK(testutil::run_tool("suggest --lexicon " + lex + " " + path).exit_code ==
        2);
}

TEST_CASE("bad command lines exit 2 and help exits 0") {
  CHECK(testutil::run_tool("").exit_code == 2);           // missing subcommand
  CHECK(testutil::run_tool("verify").exit_code == 2);     // missing file
  CHECK(testutil::run_tool("frobnicate x").exit_code == 2);
  CHECK(testutil::run_tool("--help").exit_code == 0);
  ToolResult help = testutil::run_tool("--help");
  for (const char* sub : {"verify", "generate", "report", "suggest"}) {
    CAPTURE(sub);
    CHECK(help.out.find(sub) != std::string::npos);
  }
}
