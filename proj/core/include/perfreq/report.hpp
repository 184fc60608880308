#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "perfreq/generate.hpp"
#include "perfreq/model.hpp"
#include "perfreq/verify.hpp"

namespace perfreq {

// Corpus-level defect summary (one verification report per document).
struct CorpusSummary {
  std::size_t documents = 0;
  std::size_t requirements = 0;
  std::size_t not_quantifiable = 0;
  std::size_t not_quantified = 0;
  std::size_t under_specified_total = 0;
  std::map<Aspect, std::size_t> under_specified_by_aspect;  // all five keys
  std::size_t environments_generated = 0;

  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

// Field-wise sum; summarize distributes over corpus concatenation.
CorpusSummary operator+(const CorpusSummary& a, const CorpusSummary& b);

// Counts defects by category and aspect across the reports and environments
// across the generation results. documents = number of reports;
// requirements = per-report distinct requirement ids (parameters plus
// excluded requirements) summed.
CorpusSummary summarize(const std::vector<VerificationReport>& reports,
                        const std::vector<GenerationResult>& generations);

std::string summary_json(const CorpusSummary& s);

// Aligned two-column table. Row labels for the defect rows are fixed:
// "Not-quantified Requirements", "Under-specified Parameters",
// "Under-specified Resource constraints", "Under-specified Capacity",
// "Under-specified Time-behavior", "Under-specified throughput",
// "Under-specified Efficiency".
std::string summary_text(const CorpusSummary& s);

struct CorpusRunIssue {
  std::string file;
  std::string message;
};

struct CorpusRun {
  CorpusSummary summary;
  std::vector<std::string> files;  // parsed files, sorted order
  std::vector<CorpusRunIssue> issues;  // skipped files and why
};

// Runs parse + verify + generate over every *.csv in dir_path (sorted by
// filename). Files that fail whole-file parsing are recorded as issues and
// skipped. Throws std::runtime_error when the directory itself is unusable.
CorpusRun run_corpus(const std::string& dir_path);

}  // namespace perfreq
