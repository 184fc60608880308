#include "perfreq/verify.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <tuple>

#include "json.hpp"
#include "perfreq/taxonomy.hpp"

namespace perfreq {

namespace {

std::string fold(std::string_view s) {
  std::string out;
  bool in_space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out += ' ';
    in_space = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::vector<const Parameter*> all_params(const Model& m) {
  std::vector<const Parameter*> out;
  for (const Parameter& p : m.independent) out.push_back(&p);
  for (const Parameter& p : m.dependent) out.push_back(&p);
  return out;
}

bool has_aspect(const Model& m, Aspect a) {
  for (const Parameter* p : all_params(m)) {
    if (p->aspect == a) return true;
  }
  return false;
}

std::string sort_key_req(const Defect& d) {
  return d.requirement_ids.empty() ? std::string() : d.requirement_ids.front();
}

void sort_defects(std::vector<Defect>& defects) {
  std::stable_sort(defects.begin(), defects.end(),
                   [](const Defect& a, const Defect& b) {
                     auto key = [](const Defect& d) {
                       return std::make_tuple(
                           d.model_id, sort_key_req(d),
                           std::string(defect_category_id(d.category)),
                           d.aspect ? std::string(aspect_id(*d.aspect))
                                    : std::string(),
                           d.message);
                     };
                     return key(a) < key(b);
                   });
}

nlohmann::ordered_json param_json(const Parameter& p) {
  nlohmann::ordered_json j;
  j["id"] = p.id;
  j["requirement_id"] = p.requirement_id;
  j["aspect"] = std::string(aspect_id(p.aspect));
  j["description"] = p.description;
  if (p.quantity) {
    j["value"] = p.quantity->value.str();
    j["unit"] = p.quantity->unit;
    j["comparator"] = std::string(comparator_str(p.quantity->comparator));
  } else {
    j["value"] = nullptr;
    j["unit"] = nullptr;
    j["comparator"] = nullptr;
  }
  j["quantifiable"] = p.quantifiable;
  return j;
}

nlohmann::ordered_json model_json(const Model& m) {
  nlohmann::ordered_json j;
  j["model_id"] = m.model_id;
  j["object"] = m.object;
  j["condition"] = m.condition;
  j["independent"] = nlohmann::ordered_json::array();
  for (const Parameter& p : m.independent) j["independent"].push_back(param_json(p));
  j["dependent"] = nlohmann::ordered_json::array();
  for (const Parameter& p : m.dependent) j["dependent"].push_back(param_json(p));
  return j;
}

}  // namespace

std::vector<Model> merge_models(const std::vector<Model>& models) {
  std::vector<Model> merged;
  std::vector<std::pair<std::string, std::string>> keys;

  for (const Model& m : models) {
    std::pair<std::string, std::string> key{fold(m.object), fold(m.condition)};
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      merged.push_back(m);
      continue;
    }
    Model& target = merged[static_cast<std::size_t>(it - keys.begin())];
    target.model_id += "+" + m.model_id;
    auto absorb = [](std::vector<Parameter>& dst,
                     const std::vector<Parameter>& src) {
      for (const Parameter& p : src) {
        bool dup = std::any_of(dst.begin(), dst.end(), [&](const Parameter& q) {
          return q.id == p.id;
        });
        if (!dup) dst.push_back(p);
      }
    };
    absorb(target.independent, m.independent);
    absorb(target.dependent, m.dependent);
  }
  return merged;
}

std::vector<Defect> check_quantification(const std::vector<Model>& models) {
  std::vector<Defect> out;
  for (const Model& m : models) {
    for (const Parameter* p : all_params(m)) {
      if (!p->quantifiable) {
        out.push_back(make_defect(
            DefectCategory::NotQuantifiable, p->aspect, m.model_id,
            {p->requirement_id},
            "parameter \"" + p->description + "\" is marked not quantifiable",
            Severity::Blocking));
      } else if (!quantified(*p)) {
        out.push_back(make_defect(
            DefectCategory::NotQuantified, p->aspect, m.model_id,
            {p->requirement_id},
            "parameter \"" + p->description +
                "\" is quantifiable but carries no quantity",
            Severity::Blocking));
      }
    }
  }
  return out;
}

std::vector<Defect> check_completeness(const Model& model) {
  std::vector<Defect> out;
  for (auto [aspect, role] : expected_aspects()) {
    if (aspect == Aspect::Efficiency) continue;
    if (!has_aspect(model, aspect)) {
      out.push_back(make_defect(
          DefectCategory::UnderSpecifiedParameter, aspect, model.model_id, {},
          "no " + std::string(aspect_id(aspect)) + " parameter specified",
          Severity::Warning));
    }
  }
  if (!has_aspect(model, Aspect::TimeBehavior) &&
      !has_aspect(model, Aspect::SpeedThroughput)) {
    out.push_back(make_defect(
        DefectCategory::MissingDependentMetric, std::nullopt, model.model_id,
        {}, "no time_behavior or speed_throughput metric to measure",
        Severity::Blocking));
  }
  if (!model.dependent.empty() && model.independent.empty()) {
    out.push_back(make_defect(
        DefectCategory::EmptyModel, std::nullopt, model.model_id, {},
        "dependent metrics present but no independent constraints to build a "
        "test setup from",
        Severity::Blocking));
  }
  return out;
}

std::vector<Defect> check_conflicts(const std::vector<Model>& models) {
  std::vector<Defect> out;
  for (const Model& m : models) {
    std::vector<const Parameter*> params = all_params(m);
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (!quantified(*params[i])) continue;
      for (std::size_t j = i + 1; j < params.size(); ++j) {
        if (!quantified(*params[j])) continue;
        const Parameter& a = *params[i];
        const Parameter& b = *params[j];
        if (a.aspect != b.aspect) continue;
        if (a.quantity->unit != b.quantity->unit) continue;
        if (a.quantity->value == b.quantity->value &&
            a.quantity->comparator == b.quantity->comparator)
          continue;
        out.push_back(make_defect(
            DefectCategory::Conflict, a.aspect, m.model_id,
            {a.requirement_id, b.requirement_id},
            "conflicting " + std::string(aspect_id(a.aspect)) +
                " targets in unit \"" + a.quantity->unit + "\": " +
                a.requirement_id + " (" +
                std::string(comparator_str(a.quantity->comparator)) + " " +
                a.quantity->value.str() + ") vs " + b.requirement_id + " (" +
                std::string(comparator_str(b.quantity->comparator)) + " " +
                b.quantity->value.str() + ")",
            Severity::Blocking));
      }
    }
  }
  return out;
}

VerificationReport verify(const std::vector<Model>& models,
                          const std::vector<ParseError>& exclusions) {
  VerificationReport report;
  report.models_checked = models.size();
  report.merged_models = merge_models(models);

  for (const ParseError& e : exclusions) {
    if (e.kind != ParseErrorKind::UnknownAspect) continue;
    std::vector<std::string> ids;
    if (!e.requirement_id.empty()) ids.push_back(e.requirement_id);
    report.defects.push_back(make_defect(
        DefectCategory::InfeasibleRequirement, std::nullopt, "", std::move(ids),
        "requirement excluded at ingestion: " + e.message, Severity::Blocking));
  }

  auto append = [&report](std::vector<Defect> d) {
    for (Defect& x : d) report.defects.push_back(std::move(x));
  };
  append(check_quantification(report.merged_models));
  for (const Model& m : report.merged_models) append(check_completeness(m));
  append(check_conflicts(report.merged_models));

  sort_defects(report.defects);
  return report;
}

bool has_blocking(const VerificationReport& report) {
  return count_severity(report, Severity::Blocking) > 0;
}

std::size_t count_severity(const VerificationReport& report, Severity s) {
  return static_cast<std::size_t>(
      std::count_if(report.defects.begin(), report.defects.end(),
                    [s](const Defect& d) { return d.severity == s; }));
}

std::string report_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["models_checked"] = report.models_checked;
  j["merged_models"] = nlohmann::ordered_json::array();
  for (const Model& m : report.merged_models)
    j["merged_models"].push_back(model_json(m));
  j["defects"] = nlohmann::ordered_json::array();
  for (const Defect& d : report.defects) {
    nlohmann::ordered_json dj;
    dj["category"] = std::string(defect_category_id(d.category));
    dj["severity"] = std::string(severity_id(d.severity));
    if (d.aspect) dj["aspect"] = std::string(aspect_id(*d.aspect));
    else dj["aspect"] = nullptr;
    if (d.model_id.empty()) dj["model_id"] = nullptr;
    else dj["model_id"] = d.model_id;
    dj["requirement_ids"] = d.requirement_ids;
    dj["message"] = d.message;
    j["defects"].push_back(std::move(dj));
  }
  j["blocking"] = count_severity(report, Severity::Blocking);
  j["warnings"] = count_severity(report, Severity::Warning);
  return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& report) {
  std::string out;
  out += "models checked: " + std::to_string(report.models_checked) +
         " (merged: " + std::to_string(report.merged_models.size()) + ")\n";
  out += "defects: " + std::to_string(report.defects.size()) + " (" +
         std::to_string(count_severity(report, Severity::Blocking)) +
         " blocking, " +
         std::to_string(count_severity(report, Severity::Warning)) +
         " warnings)\n";
  for (const Defect& d : report.defects) {
    out += "[" + std::string(severity_id(d.severity)) + "] " +
           std::string(defect_category_id(d.category));
    if (d.aspect) out += "/" + std::string(aspect_id(*d.aspect));
    if (!d.model_id.empty()) out += " model=" + d.model_id;
    if (!d.requirement_ids.empty()) {
      out += " requirements=";
      for (std::size_t i = 0; i < d.requirement_ids.size(); ++i) {
        if (i) out += ",";
        out += d.requirement_ids[i];
      }
    }
    out += ": " + d.message + "\n";
  }
  return out;
}

}  // namespace perfreq
