#include "perfreq/generate.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "perfreq/taxonomy.hpp"

namespace perfreq {

namespace {

std::string render_description(const Parameter& p) {
  return quantified(p) ? p.description : "? " + p.description;
}

std::string missing_error(const Parameter& p) {
  std::string e = "missing quantity: " + p.description;
  if (!p.requirement_id.empty()) e += " (" + p.requirement_id + ")";
  return e;
}

nlohmann::ordered_json environment_json(const TestEnvironment& env) {
  nlohmann::ordered_json ej;
  ej["constraints"] = nlohmann::ordered_json::array();
  for (const ConstraintEntry& c : env.constraints) {
    nlohmann::ordered_json cj;
    cj["description"] = c.description;
    cj["att_class"] = std::string(aspect_id(c.aspect));
    ej["constraints"].push_back(std::move(cj));
  }
  ej["object_metric_pairs"] = nlohmann::ordered_json::array();
  for (const ObjectMetricPair& p : env.object_metric_pairs) {
    nlohmann::ordered_json pj;
    pj["object"] = p.object;
    if (p.metric) {
      nlohmann::ordered_json mj;
      mj["description"] = p.metric->description;
      mj["att_class"] = std::string(aspect_id(p.metric->aspect));
      pj["metric"] = std::move(mj);
    } else {
      pj["metric"] = nullptr;
    }
    ej["object_metric_pairs"].push_back(std::move(pj));
  }
  ej["errors"] = env.errors;
  return ej;
}

}  // namespace

std::pair<std::vector<Parameter>, std::vector<Parameter>> build_lists(
    const Model& model) {
  std::vector<Parameter> constraints = model.independent;
  std::vector<Parameter> metrics;
  for (Aspect a : {Aspect::TimeBehavior, Aspect::SpeedThroughput,
                   Aspect::Efficiency}) {
    for (const Parameter& p : model.dependent) {
      if (p.aspect == a) metrics.push_back(p);
    }
  }
  return {std::move(constraints), std::move(metrics)};
}

GenerationResult generate_environments(const Model& model) {
  auto [constraints, metrics] = build_lists(model);

  struct Entry {
    ConstraintEntry rendered;
    const Parameter* param;
  };
  std::vector<Entry> entries;
  for (const Parameter& p : constraints) {
    ConstraintEntry rendered{render_description(p), p.aspect};
    bool dup = std::any_of(entries.begin(), entries.end(), [&](const Entry& e) {
      return e.rendered == rendered;
    });
    if (!dup) entries.push_back({std::move(rendered), &p});
  }

  std::vector<std::string> objects = object_list(model);
  std::vector<ObjectMetricPair> pairs;
  std::size_t n_pairs =
      metrics.empty() ? objects.size() : std::max(objects.size(), metrics.size());
  for (std::size_t i = 0; i < n_pairs; ++i) {
    ObjectMetricPair pair;
    pair.object = objects[std::min(i, objects.size() - 1)];
    if (i < metrics.size()) {
      pair.metric =
          MetricEntry{render_description(metrics[i]), metrics[i].aspect};
    }
    pairs.push_back(std::move(pair));
  }

  auto build_env = [&](const std::vector<const Entry*>& subset) {
    std::vector<ConstraintEntry> cs;
    std::vector<std::string> errors;
    for (const Entry* e : subset) cs.push_back(e->rendered);
    for (const Entry* e : subset) {
      if (!quantified(*e->param)) errors.push_back(missing_error(*e->param));
    }
    for (const Parameter& p : metrics) {
      if (!quantified(p)) errors.push_back(missing_error(p));
    }
    if (metrics.empty()) errors.push_back("no dependent metric");
    if (subset.empty()) errors.push_back("no constraints");
    return make_test_environment(std::move(cs), pairs, std::move(errors));
  };

  std::vector<TestEnvironment> envs;
  for (const Entry& e : entries) envs.push_back(build_env({&e}));
  std::vector<const Entry*> all;
  for (const Entry& e : entries) all.push_back(&e);
  envs.push_back(build_env(all));  // aggregate goes last

  GenerationResult result;
  result.source_model_id = model.model_id;
  for (TestEnvironment& env : envs) {
    bool dup = std::any_of(result.environments.begin(),
                           result.environments.end(),
                           [&](const TestEnvironment& e) { return e == env; });
    if (!dup) result.environments.push_back(std::move(env));
  }
  return result;
}

std::string serialize_environments(
    const std::vector<GenerationResult>& results) {
  nlohmann::ordered_json root;
  root["test_environments"] = nlohmann::ordered_json::array();
  for (const GenerationResult& r : results) {
    for (const TestEnvironment& env : r.environments) {
      root["test_environments"].push_back(environment_json(env));
    }
  }
  return root.dump(2) + "\n";
}

std::vector<TestEnvironment> parse_environments(std::string_view json_text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad environment JSON: ") +
                                e.what());
  }
  if (!root.is_object() || !root.contains("test_environments") ||
      !root["test_environments"].is_array()) {
    throw std::invalid_argument(
        "bad environment JSON: expected object with test_environments array");
  }

  auto aspect_of = [](const nlohmann::json& j,
                      const char* key) -> Aspect {
    if (!j.contains(key) || !j[key].is_string())
      throw std::invalid_argument("bad environment JSON: missing att_class");
    auto a = aspect_from_id(j[key].get<std::string>());
    if (!a)
      throw std::invalid_argument("bad environment JSON: unknown att_class \"" +
                                  j[key].get<std::string>() + "\"");
    return *a;
  };

  std::vector<TestEnvironment> out;
  try {
    for (const nlohmann::json& ej : root["test_environments"]) {
      std::vector<ConstraintEntry> constraints;
      std::vector<ObjectMetricPair> pairs;
      std::vector<std::string> errors;
      for (const nlohmann::json& cj :
           ej.value("constraints", nlohmann::json::array())) {
        constraints.push_back({cj.at("description").get<std::string>(),
                               aspect_of(cj, "att_class")});
      }
      for (const nlohmann::json& pj :
           ej.value("object_metric_pairs", nlohmann::json::array())) {
        ObjectMetricPair pair;
        pair.object = pj.at("object").get<std::string>();
        if (pj.contains("metric") && !pj["metric"].is_null()) {
          pair.metric =
              MetricEntry{pj["metric"].at("description").get<std::string>(),
                          aspect_of(pj["metric"], "att_class")};
        }
        pairs.push_back(std::move(pair));
      }
      for (const nlohmann::json& e :
           ej.value("errors", nlohmann::json::array())) {
        errors.push_back(e.get<std::string>());
      }
      out.push_back(make_test_environment(std::move(constraints),
                                          std::move(pairs),
                                          std::move(errors)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad environment JSON: ") +
                                e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("bad environment JSON: ") +
                                e.what());
  }
  return out;
}

}  // namespace perfreq
