#include "perfreq/model.hpp"

#include <stdexcept>

#include "perfreq/taxonomy.hpp"

namespace perfreq {

std::string_view aspect_id(Aspect a) {
  switch (a) {
    case Aspect::TimeBehavior: return "time_behavior";
    case Aspect::ResourceConstraint: return "resource_constraint";
    case Aspect::Capacity: return "capacity";
    case Aspect::SpeedThroughput: return "speed_throughput";
    case Aspect::Efficiency: return "efficiency";
  }
  throw std::logic_error("unhandled aspect");
}

std::optional<Aspect> aspect_from_id(std::string_view id) {
  for (Aspect a : kAllAspects) {
    if (aspect_id(a) == id) return a;
  }
  return std::nullopt;
}

std::string_view role_id(Role r) {
  return r == Role::Independent ? "independent" : "dependent";
}

std::string_view comparator_str(Comparator c) {
  switch (c) {
    case Comparator::Le: return "<=";
    case Comparator::Lt: return "<";
    case Comparator::Eq: return "==";
    case Comparator::Gt: return ">";
    case Comparator::Ge: return ">=";
  }
  throw std::logic_error("unhandled comparator");
}

std::optional<Comparator> comparator_from(std::string_view text) {
  if (text == "<=" || text == "≤") return Comparator::Le;
  if (text == "<") return Comparator::Lt;
  if (text == "==" || text == "=") return Comparator::Eq;
  if (text == ">") return Comparator::Gt;
  if (text == ">=" || text == "≥") return Comparator::Ge;
  return std::nullopt;
}

bool quantified(const Parameter& p) { return p.quantity.has_value(); }

Parameter make_parameter(std::string id, std::string requirement_id,
                         Aspect aspect, std::string description,
                         std::optional<Quantity> quantity, bool quantifiable) {
  if (quantity) {
    if (!quantifiable) {
      throw std::invalid_argument(
          "parameter " + id + ": quantified but marked not quantifiable");
    }
    if (quantity->value.negative()) {
      throw std::invalid_argument("parameter " + id + ": negative quantity");
    }
    if (quantity->unit.empty()) {
      throw std::invalid_argument("parameter " + id +
                                  ": quantity without a unit");
    }
  }
  Parameter p;
  p.id = std::move(id);
  p.requirement_id = std::move(requirement_id);
  p.aspect = aspect;
  p.description = std::move(description);
  p.quantity = std::move(quantity);
  p.quantifiable = quantifiable;
  return p;
}

Model make_model(std::string model_id, std::string object,
                 std::string condition, std::vector<Parameter> independent,
                 std::vector<Parameter> dependent) {
  if (object.empty()) {
    throw std::invalid_argument("model " + model_id + ": empty object");
  }
  for (const Parameter& p : independent) {
    if (classify_role(p.aspect) != Role::Independent) {
      throw std::invalid_argument(
          "model " + model_id + ": " + std::string(aspect_id(p.aspect)) +
          " parameter " + p.id + " cannot be independent");
    }
  }
  for (const Parameter& p : dependent) {
    if (classify_role(p.aspect) != Role::Dependent) {
      throw std::invalid_argument(
          "model " + model_id + ": " + std::string(aspect_id(p.aspect)) +
          " parameter " + p.id + " cannot be dependent");
    }
  }
  Model m;
  m.model_id = std::move(model_id);
  m.object = std::move(object);
  m.condition = std::move(condition);
  m.independent = std::move(independent);
  m.dependent = std::move(dependent);
  return m;
}

std::vector<std::string> object_list(const Model& m) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= m.object.size()) {
    std::size_t comma = m.object.find(',', start);
    std::string_view piece(m.object);
    piece = piece.substr(start, comma == std::string::npos ? std::string::npos
                                                           : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
      piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
      piece.remove_suffix(1);
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) out.push_back(m.object);
  return out;
}

std::string_view defect_category_id(DefectCategory c) {
  switch (c) {
    case DefectCategory::NotQuantifiable: return "not_quantifiable";
    case DefectCategory::NotQuantified: return "not_quantified";
    case DefectCategory::UnderSpecifiedParameter:
      return "under_specified_parameter";
    case DefectCategory::Conflict: return "conflict";
    case DefectCategory::InfeasibleRequirement: return "infeasible_requirement";
    case DefectCategory::MissingDependentMetric:
      return "missing_dependent_metric";
    case DefectCategory::EmptyModel: return "empty_model";
  }
  throw std::logic_error("unhandled defect category");
}

std::string_view severity_id(Severity s) {
  return s == Severity::Blocking ? "blocking" : "warning";
}

Defect make_defect(DefectCategory category, std::optional<Aspect> aspect,
                   std::string model_id,
                   std::vector<std::string> requirement_ids,
                   std::string message, Severity severity) {
  if (category == DefectCategory::Conflict && requirement_ids.size() < 2) {
    throw std::invalid_argument("conflict needs at least two requirements");
  }
  if ((category == DefectCategory::Conflict ||
       category == DefectCategory::UnderSpecifiedParameter) &&
      !aspect) {
    throw std::invalid_argument(
        std::string(defect_category_id(category)) + " needs an aspect");
  }
  if (category == DefectCategory::UnderSpecifiedParameter &&
      aspect == Aspect::Efficiency) {
    throw std::invalid_argument(
        "efficiency absence is never an under-specification defect");
  }
  Defect d;
  d.category = category;
  d.aspect = aspect;
  d.model_id = std::move(model_id);
  d.requirement_ids = std::move(requirement_ids);
  d.message = std::move(message);
  d.severity = severity;
  return d;
}

TestEnvironment make_test_environment(std::vector<ConstraintEntry> constraints,
                                      std::vector<ObjectMetricPair> pairs,
                                      std::vector<std::string> errors) {
  for (const ConstraintEntry& c : constraints) {
    if (classify_role(c.aspect) != Role::Independent) {
      throw std::invalid_argument("constraint with dependent aspect " +
                                  std::string(aspect_id(c.aspect)));
    }
  }
  for (const ObjectMetricPair& p : pairs) {
    if (p.metric && classify_role(p.metric->aspect) != Role::Dependent) {
      throw std::invalid_argument("metric with independent aspect " +
                                  std::string(aspect_id(p.metric->aspect)));
    }
  }
  TestEnvironment env;
  env.constraints = std::move(constraints);
  env.object_metric_pairs = std::move(pairs);
  env.errors = std::move(errors);
  return env;
}

}  // namespace perfreq
