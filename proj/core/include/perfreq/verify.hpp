#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "perfreq/csv.hpp"
#include "perfreq/model.hpp"

namespace perfreq {

struct VerificationReport {
  std::vector<Defect> defects;
  std::size_t models_checked = 0;  // models given, before merging
  std::vector<Model> merged_models;
};

// Merges models that share (object, condition); both strings are compared
// case-insensitively after whitespace normalization. Models with the same
// object but different conditions stay separate. Parameter lists are
// concatenated in input order with duplicates (by parameter id) dropped;
// the merged model id joins the constituent ids with '+'.
std::vector<Model> merge_models(const std::vector<Model>& models);

// Per parameter: quantifiable=false -> NotQuantifiable (blocking);
// quantifiable but no value -> NotQuantified (blocking).
std::vector<Defect> check_quantification(const std::vector<Model>& models);

// Per model:
//  - each aspect other than Efficiency with no parameter present ->
//    UnderSpecifiedParameter warning (Efficiency absence is never a defect:
//    it is derivable from the other aspects);
//  - no TimeBehavior and no SpeedThroughput parameter ->
//    MissingDependentMetric (blocking): nothing to measure in a test run;
//  - dependent parameters present but no independent ones ->
//    EmptyModel (blocking): nothing to build a test setup from.
std::vector<Defect> check_completeness(const Model& model);

// Within one model: two quantified parameters of the same aspect and the
// same unit whose (comparator, value) differ -> Conflict (blocking).
// Different units are never compared; there is no unit conversion.
std::vector<Defect> check_conflicts(const std::vector<Model>& models);

// Full pass: merge, then quantification + completeness + conflicts, plus
// one InfeasibleRequirement defect per unknown-aspect ingestion exclusion.
// Defects come out in a deterministic order (model id, requirement id,
// category, aspect, message).
VerificationReport verify(const std::vector<Model>& models,
                          const std::vector<ParseError>& exclusions = {});

bool has_blocking(const VerificationReport& report);
std::size_t count_severity(const VerificationReport& report, Severity s);

// JSON rendering (2-space indent, trailing newline, fixed key order).
std::string report_json(const VerificationReport& report);

// Human-readable rendering: counts plus one line per defect.
std::string report_text(const VerificationReport& report);

}  // namespace perfreq
