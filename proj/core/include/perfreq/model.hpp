#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perfreq/rational.hpp"

namespace perfreq {

// The five performance aspects. Requirements that fit none of them are not
// performance requirements and are excluded at ingestion; there is no
// catch-all variant.
enum class Aspect {
  TimeBehavior,
  ResourceConstraint,
  Capacity,
  SpeedThroughput,
  Efficiency,
};

inline constexpr std::array<Aspect, 5> kAllAspects = {
    Aspect::TimeBehavior, Aspect::ResourceConstraint, Aspect::Capacity,
    Aspect::SpeedThroughput, Aspect::Efficiency};

// Snake_case identifier used in CSV input and JSON output
// ("time_behavior", "resource_constraint", ...).
std::string_view aspect_id(Aspect a);
std::optional<Aspect> aspect_from_id(std::string_view id);

enum class Role { Independent, Dependent };

std::string_view role_id(Role r);

enum class Comparator { Le, Lt, Eq, Gt, Ge };

std::string_view comparator_str(Comparator c);
// Accepts the ASCII forms "<=", "<", "==", ">", ">=", plus "=" and the
// single-character Unicode relations, normalizing them onto the enum.
std::optional<Comparator> comparator_from(std::string_view text);

// Numeric target of a quantified parameter. Bundled so that unit and
// comparator exist exactly when the value does.
struct Quantity {
  Rational value;
  std::string unit;
  Comparator comparator = Comparator::Le;

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

// One coded requirement fragment.
struct Parameter {
  std::string id;
  std::string requirement_id;
  Aspect aspect = Aspect::TimeBehavior;
  std::string description;
  std::optional<Quantity> quantity;
  bool quantifiable = true;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

// True iff the parameter actually carries a number.
bool quantified(const Parameter& p);

// Validating constructor. Throws std::invalid_argument when a quantity is
// present on a parameter marked not quantifiable, when the quantity's value
// is negative, or when its unit is empty.
Parameter make_parameter(std::string id, std::string requirement_id,
                         Aspect aspect, std::string description,
                         std::optional<Quantity> quantity, bool quantifiable);

// One object (plus optional condition) with its parameters split by role.
struct Model {
  std::string model_id;
  std::string object;
  std::string condition;  // empty means unconditional
  std::vector<Parameter> independent;
  std::vector<Parameter> dependent;

  friend bool operator==(const Model&, const Model&) = default;
};

// Validating constructor. Throws std::invalid_argument when object is empty
// or a parameter sits in the list that contradicts its aspect's role.
Model make_model(std::string model_id, std::string object,
                 std::string condition, std::vector<Parameter> independent,
                 std::vector<Parameter> dependent);

// A model's object may name several objects separated by commas ("command
// response, software"); this expands the list (trimmed, empties dropped).
// Falls back to the raw object string when splitting yields nothing.
std::vector<std::string> object_list(const Model& m);

enum class DefectCategory {
  NotQuantifiable,
  NotQuantified,
  UnderSpecifiedParameter,
  Conflict,
  InfeasibleRequirement,
  MissingDependentMetric,
  EmptyModel,
};

std::string_view defect_category_id(DefectCategory c);

enum class Severity { Blocking, Warning };

std::string_view severity_id(Severity s);

// One verification finding.
struct Defect {
  DefectCategory category = DefectCategory::NotQuantified;
  std::optional<Aspect> aspect;
  std::string model_id;  // empty when the defect is not tied to a model
  std::vector<std::string> requirement_ids;
  std::string message;
  Severity severity = Severity::Blocking;

  friend bool operator==(const Defect&, const Defect&) = default;
};

// Validating constructor. Throws std::invalid_argument when Conflict carries
// fewer than two requirement ids, when UnderSpecifiedParameter or Conflict
// lacks an aspect, or when UnderSpecifiedParameter names Efficiency.
Defect make_defect(DefectCategory category, std::optional<Aspect> aspect,
                   std::string model_id,
                   std::vector<std::string> requirement_ids,
                   std::string message, Severity severity);

// Entry of a test environment's constraints list.
struct ConstraintEntry {
  std::string description;
  Aspect aspect = Aspect::Capacity;

  friend bool operator==(const ConstraintEntry&,
                         const ConstraintEntry&) = default;
};

struct MetricEntry {
  std::string description;
  Aspect aspect = Aspect::TimeBehavior;

  friend bool operator==(const MetricEntry&, const MetricEntry&) = default;
};

struct ObjectMetricPair {
  std::string object;
  std::optional<MetricEntry> metric;

  friend bool operator==(const ObjectMetricPair&,
                         const ObjectMetricPair&) = default;
};

// One generated test environment: constraints to build the setup, pairs
// naming what to test and what to measure, and errors carrying gaps
// (unquantified inputs, missing mandatory aspects).
struct TestEnvironment {
  std::vector<ConstraintEntry> constraints;
  std::vector<ObjectMetricPair> object_metric_pairs;
  std::vector<std::string> errors;

  friend bool operator==(const TestEnvironment&,
                         const TestEnvironment&) = default;
};

// Validating constructor. Throws std::invalid_argument when a constraint
// aspect is not independent or a metric aspect is not dependent.
TestEnvironment make_test_environment(std::vector<ConstraintEntry> constraints,
                                      std::vector<ObjectMetricPair> pairs,
                                      std::vector<std::string> errors);

}  // namespace perfreq
