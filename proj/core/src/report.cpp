#include "perfreq/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "perfreq/csv.hpp"

namespace perfreq {

namespace {

void init_aspects(CorpusSummary& s) {
  for (Aspect a : kAllAspects) s.under_specified_by_aspect.emplace(a, 0);
}

// Display order of the per-aspect rows (matches the published table).
constexpr std::array<Aspect, 5> kAspectRowOrder = {
    Aspect::ResourceConstraint, Aspect::Capacity, Aspect::TimeBehavior,
    Aspect::SpeedThroughput, Aspect::Efficiency};

std::string aspect_row_label(Aspect a) {
  switch (a) {
    case Aspect::ResourceConstraint: return "Under-specified Resource constraints";
    case Aspect::Capacity: return "Under-specified Capacity";
    case Aspect::TimeBehavior: return "Under-specified Time-behavior";
    case Aspect::SpeedThroughput: return "Under-specified throughput";
    case Aspect::Efficiency: return "Under-specified Efficiency";
  }
  throw std::logic_error("unhandled aspect");
}

}  // namespace

CorpusSummary operator+(const CorpusSummary& a, const CorpusSummary& b) {
  CorpusSummary s;
  init_aspects(s);
  s.documents = a.documents + b.documents;
  s.requirements = a.requirements + b.requirements;
  s.not_quantifiable = a.not_quantifiable + b.not_quantifiable;
  s.not_quantified = a.not_quantified + b.not_quantified;
  s.under_specified_total = a.under_specified_total + b.under_specified_total;
  s.environments_generated =
      a.environments_generated + b.environments_generated;
  for (Aspect asp : kAllAspects) {
    std::size_t av = 0, bv = 0;
    if (auto it = a.under_specified_by_aspect.find(asp);
        it != a.under_specified_by_aspect.end())
      av = it->second;
    if (auto it = b.under_specified_by_aspect.find(asp);
        it != b.under_specified_by_aspect.end())
      bv = it->second;
    s.under_specified_by_aspect[asp] = av + bv;
  }
  return s;
}

CorpusSummary summarize(const std::vector<VerificationReport>& reports,
                        const std::vector<GenerationResult>& generations) {
  CorpusSummary s;
  init_aspects(s);
  s.documents = reports.size();

  for (const VerificationReport& report : reports) {
    std::set<std::string> req_ids;
    for (const Model& m : report.merged_models) {
      for (const Parameter& p : m.independent) req_ids.insert(p.requirement_id);
      for (const Parameter& p : m.dependent) req_ids.insert(p.requirement_id);
    }
    for (const Defect& d : report.defects) {
      switch (d.category) {
        case DefectCategory::NotQuantifiable:
          ++s.not_quantifiable;
          break;
        case DefectCategory::NotQuantified:
          ++s.not_quantified;
          break;
        case DefectCategory::UnderSpecifiedParameter:
          ++s.under_specified_total;
          ++s.under_specified_by_aspect[*d.aspect];
          break;
        case DefectCategory::InfeasibleRequirement:
          for (const std::string& id : d.requirement_ids) req_ids.insert(id);
          break;
        default:
          break;
      }
    }
    s.requirements += req_ids.size();
  }

  for (const GenerationResult& g : generations)
    s.environments_generated += g.environments.size();
  return s;
}

std::string summary_json(const CorpusSummary& s) {
  nlohmann::ordered_json j;
  j["documents"] = s.documents;
  j["requirements"] = s.requirements;
  j["not_quantifiable"] = s.not_quantifiable;
  j["not_quantified"] = s.not_quantified;
  j["under_specified_total"] = s.under_specified_total;
  nlohmann::ordered_json by_aspect;
  for (Aspect a : kAspectRowOrder) {
    std::size_t v = 0;
    if (auto it = s.under_specified_by_aspect.find(a);
        it != s.under_specified_by_aspect.end())
      v = it->second;
    by_aspect[std::string(aspect_id(a))] = v;
  }
  j["under_specified_by_aspect"] = std::move(by_aspect);
  j["environments_generated"] = s.environments_generated;
  return j.dump(2) + "\n";
}

std::string summary_text(const CorpusSummary& s) {
  std::vector<std::pair<std::string, std::size_t>> rows;
  rows.emplace_back("Documents", s.documents);
  rows.emplace_back("Requirements", s.requirements);
  rows.emplace_back("Not-quantifiable Requirements", s.not_quantifiable);
  rows.emplace_back("Not-quantified Requirements", s.not_quantified);
  rows.emplace_back("Under-specified Parameters", s.under_specified_total);
  for (Aspect a : kAspectRowOrder) {
    std::size_t v = 0;
    if (auto it = s.under_specified_by_aspect.find(a);
        it != s.under_specified_by_aspect.end())
      v = it->second;
    rows.emplace_back(aspect_row_label(a), v);
  }
  rows.emplace_back("Test environments generated", s.environments_generated);

  std::size_t width = 0;
  for (const auto& [label, _] : rows) width = std::max(width, label.size());

  std::string out;
  for (const auto& [label, count] : rows) {
    out += label;
    out.append(width - label.size() + 2, ' ');
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

CorpusRun run_corpus(const std::string& dir_path) {
  namespace fs = std::filesystem;
  fs::path dir(dir_path);
  std::error_code ec;
  if (!fs::exists(dir, ec) || !fs::is_directory(dir, ec)) {
    throw std::runtime_error("not a directory: " + dir_path);
  }

  std::vector<fs::path> paths;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  CorpusRun run;
  std::vector<VerificationReport> reports;
  std::vector<GenerationResult> generations;

  for (const fs::path& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      run.issues.push_back({path.filename().string(), "cannot open file"});
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      ParseResult parsed = parse_models(buf.str());
      VerificationReport report = verify(parsed.models, parsed.errors);
      for (const Model& m : report.merged_models)
        generations.push_back(generate_environments(m));
      reports.push_back(std::move(report));
      run.files.push_back(path.filename().string());
    } catch (const CsvFileError& e) {
      run.issues.push_back({path.filename().string(), e.what()});
    }
  }

  run.summary = summarize(reports, generations);
  return run;
}

}  // namespace perfreq
