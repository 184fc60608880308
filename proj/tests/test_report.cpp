#include <stdexcept>

#include "doctest.h"
#include "perfreq/csv.hpp"
#include "perfreq/report.hpp"
#include "test_util.hpp"

using namespace perfreq;

namespace {

struct DocumentRun {
  VerificationReport report;
  std::vector<GenerationResult> generations;
};

DocumentRun run_document(const std::string& fixture) {
  ParseResult parsed =
      parse_models(testutil::read_file(testutil::fixture_path(fixture)));
  DocumentRun run;
  run.report = verify(parsed.models, parsed.errors);
  for (const Model& m : run.report.merged_models) {
    run.generations.push_back(generate_environments(m));
  }
  return run;
}

CorpusSummary alpha_expected() {
  CorpusSummary s;
  s.documents = 1;
  s.requirements = 7;
  s.not_quantifiable = 1;
  s.not_quantified = 1;
  s.under_specified_total = 5;
  s.under_specified_by_aspect = {{Aspect::TimeBehavior, 0},
                                 {Aspect::ResourceConstraint, 2},
                                 {Aspect::Capacity, 1},
                                 {Aspect::SpeedThroughput, 2},
                                 {Aspect::Efficiency, 0}};
  s.environments_generated = 5;
  return s;
}

CorpusSummary beta_expected() {
  CorpusSummary s;
  s.documents = 1;
  s.requirements = 5;  // Q1..Q4 plus the excluded Q5
  s.not_quantifiable = 0;
  s.not_quantified = 0;
  s.under_specified_total = 6;
  s.under_specified_by_aspect = {{Aspect::TimeBehavior, 2},
                                 {Aspect::ResourceConstraint, 1},
                                 {Aspect::Capacity, 1},
                                 {Aspect::SpeedThroughput, 2},
                                 {Aspect::Efficiency, 0}};
  s.environments_generated = 4;
  return s;
}

}  // namespace

TEST_CASE("summarizing nothing yields a zeroed table") {
  CorpusSummary s = summarize({}, {});
  CHECK(s.documents == 0);
  CHECK(s.requirements == 0);
  CHECK(s.not_quantifiable == 0);
  CHECK(s.not_quantified == 0);
  CHECK(s.under_specified_total == 0);
  CHECK(s.environments_generated == 0);
  REQUIRE(s.under_specified_by_aspect.size() == 5);
  for (const auto& [aspect, count] : s.under_specified_by_aspect) {
    CHECK(count == 0);
  }
}

TEST_CASE("single-document summaries match hand counts") {
  DocumentRun alpha = run_document("corpus/alpha.csv");
  CHECK(summarize({alpha.report}, alpha.generations) == alpha_expected());

  DocumentRun beta = run_document("corpus/beta.csv");
  CHECK(summarize({beta.report}, beta.generations) == beta_expected());
}

TEST_CASE("summaries add field-wise and distribute over concatenation") {
  DocumentRun alpha = run_document("corpus/alpha.csv");
  DocumentRun beta = run_document("corpus/beta.csv");

  CorpusSummary sum = alpha_expected() + beta_expected();
  CHECK(sum.documents == 2);
  CHECK(sum.requirements == 12);
  CHECK(sum.under_specified_total == 11);
  CHECK(sum.under_specified_by_aspect.at(Aspect::SpeedThroughput) == 4);
  CHECK(sum.environments_generated == 9);

  std::vector<GenerationResult> all = alpha.generations;
  all.insert(all.end(), beta.generations.begin(), beta.generations.end());
  CHECK(summarize({alpha.report, beta.report}, all) == sum);
}

TEST_CASE("efficiency never appears under-specified") {
  DocumentRun alpha = run_document("corpus/alpha.csv");
  DocumentRun beta = run_document("corpus/beta.csv");
  std::vector<GenerationResult> all = alpha.generations;
  all.insert(all.end(), beta.generations.begin(), beta.generations.end());
  CorpusSummary s = summarize({alpha.report, beta.report}, all);
  CHECK(s.under_specified_by_aspect.at(Aspect::Efficiency) == 0);
}

TEST_CASE("summary table uses the fixed row labels") {
  CorpusSummary s = alpha_expected() + beta_expected();
  std::string text = summary_text(s);
  for (const char* label :
       {"Documents", "Requirements", "Not-quantifiable Requirements",
        "Not-quantified Requirements", "Under-specified Parameters",
        "Under-specified Resource constraints", "Under-specified Capacity",
        "Under-specified Time-behavior", "Under-specified throughput",
        "Under-specified Efficiency", "Test environments generated"}) {
    CAPTURE(label);
    CHECK(text.find(label) != std::string::npos);
  }
  // the throughput row keeps its lowercase t and the counts line up
  CHECK(text.find("Under-specified Throughput") == std::string::npos);
  CHECK(text.find("Under-specified throughput") < text.rfind(" 4"));
  CHECK(text.back() == '\n');
}

TEST_CASE("summary JSON carries every field") {
  std::string json = summary_json(alpha_expected() + beta_expected());
  for (const char* needle :
       {"\"documents\": 2", "\"requirements\": 12", "\"not_quantifiable\": 1",
        "\"not_quantified\": 1", "\"under_specified_total\": 11",
        "\"under_specified_by_aspect\"", "\"resource_constraint\": 3",
        "\"capacity\": 2", "\"time_behavior\": 2", "\"speed_throughput\": 4",
        "\"efficiency\": 0", "\"environments_generated\": 9"}) {
    CAPTURE(needle);
    CHECK(json.find(needle) != std::string::npos);
  }
  CHECK(json.back() == '\n');
}

TEST_CASE("run_corpus walks the directory in filename order") {
  CorpusRun run = run_corpus(testutil::fixture_path("corpus"));
  CHECK(run.files == std::vector<std::string>{"alpha.csv", "beta.csv"});
  CHECK(run.issues.empty());
  CHECK(run.summary == alpha_expected() + beta_expected());
}

TEST_CASE("run_corpus rejects an unusable directory") {
  CHECK_THROWS_AS(run_corpus(testutil::fixture_path("no_such_dir")),
                  std::runtime_error);
}
