#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perfreq/model.hpp"

namespace perfreq {

struct GenerationResult {
  std::string source_model_id;
  std::vector<TestEnvironment> environments;

  friend bool operator==(const GenerationResult&,
                         const GenerationResult&) = default;
};

// Splits a merged model into the generation inputs: constraints are the
// independent parameters in stored (row) order; metrics are the dependent
// parameters grouped TimeBehavior, then SpeedThroughput, then Efficiency
// (stable within each group).
std::pair<std::vector<Parameter>, std::vector<Parameter>> build_lists(
    const Model& model);

// Emits one environment per distinct constraint (that constraint plus every
// metric) and one aggregate environment with all constraints, appended last.
// Structurally identical environments are deduped, so a model with k
// distinct constraints yields k+1 environments for k >= 2 and exactly one
// for k in {0, 1}. Unquantified parameters appear with a "? " description
// prefix and a "missing quantity" error; an empty metrics list adds a
// "no dependent metric" error, an empty constraints list "no constraints".
GenerationResult generate_environments(const Model& model);

// JSON wire format:
//   {"test_environments": [{"constraints": [{"description", "att_class"}],
//     "object_metric_pairs": [{"object", "metric"}], "errors": []}]}
// att_class values are the snake_case aspect ids; metric is null for a bare
// object. 2-space indent, trailing newline, byte-deterministic.
std::string serialize_environments(const std::vector<GenerationResult>& results);

// Parses the wire format back into environments (flattened; model
// attribution is not part of the format). Throws std::invalid_argument on
// malformed input.
std::vector<TestEnvironment> parse_environments(std::string_view json_text);

}  // namespace perfreq
