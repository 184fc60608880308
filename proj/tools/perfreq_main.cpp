#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "perfreq/csv.hpp"
#include "perfreq/generate.hpp"
#include "perfreq/lexicon.hpp"
#include "perfreq/report.hpp"
#include "perfreq/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDefects = 1;
constexpr int kIoError = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Returns nullopt (and sets exit_code) when the file cannot be used at all.
std::optional<perfreq::ParseResult> load_models(const std::string& path,
                                                int& exit_code) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    exit_code = kIoError;
    return std::nullopt;
  }
  try {
    perfreq::ParseResult parsed = perfreq::parse_models(*text);
    for (const perfreq::ParseError& e : parsed.errors) {
      std::cerr << "warning: " << path << ": line " << e.line << ": "
                << e.message << "\n";
    }
    for (const std::string& note : parsed.notes) {
      std::cerr << "note: " << path << ": " << note << "\n";
    }
    return parsed;
  } catch (const perfreq::CsvFileError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    exit_code = kIoError;
    return std::nullopt;
  }
}

int run_verify(const std::string& path, bool as_json, bool strict) {
  int exit_code = kOk;
  auto parsed = load_models(path, exit_code);
  if (!parsed) return exit_code;

  perfreq::VerificationReport report =
      perfreq::verify(parsed->models, parsed->errors);
  std::cout << (as_json ? perfreq::report_json(report)
                        : perfreq::report_text(report));

  if (perfreq::has_blocking(report)) return kDefects;
  if (strict && perfreq::count_severity(report, perfreq::Severity::Warning) > 0)
    return kDefects;
  return kOk;
}

int run_generate(const std::string& path, const std::string& out_path) {
  int exit_code = kOk;
  auto parsed = load_models(path, exit_code);
  if (!parsed) return exit_code;

  perfreq::VerificationReport report =
      perfreq::verify(parsed->models, parsed->errors);
  std::cerr << perfreq::report_text(report);

  std::vector<perfreq::GenerationResult> results;
  for (const perfreq::Model& m : report.merged_models)
    results.push_back(perfreq::generate_environments(m));
  std::string json = perfreq::serialize_environments(results);

  if (out_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kIoError;
    }
    out << json;
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kIoError;
    }
  }
  return perfreq::has_blocking(report) ? kDefects : kOk;
}

int run_report(const std::string& dir, bool as_json) {
  perfreq::CorpusRun run;
  try {
    run = perfreq::run_corpus(dir);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  for (const perfreq::CorpusRunIssue& issue : run.issues) {
    std::cerr << "warning: skipped " << issue.file << ": " << issue.message
              << "\n";
  }
  std::cout << (as_json ? perfreq::summary_json(run.summary)
                        : perfreq::summary_text(run.summary));
  return kOk;
}

int run_suggest(const std::string& path, const std::string& lexicon_path) {
  const perfreq::Lexicon* lexicon = &perfreq::Lexicon::default_lexicon();
  perfreq::Lexicon custom;
  if (!lexicon_path.empty()) {
    auto text = read_file(lexicon_path);
    if (!text) {
      std::cerr << "error: cannot read " << lexicon_path << "\n";
      return kIoError;
    }
    try {
      custom = perfreq::Lexicon::parse(*text);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << lexicon_path << ": " << e.what() << "\n";
      return kIoError;
    }
    lexicon = &custom;
  }

  auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return kIoError;
  }

  std::istringstream lines(*text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::cout << line << "\n";
    auto suggestions = lexicon->suggest(line);
    if (suggestions.empty()) {
      std::cout << "  (no match)\n";
      continue;
    }
    for (const perfreq::AspectSuggestion& s : suggestions) {
      std::cout << "  " << perfreq::aspect_id(s.aspect) << " (" << s.score
                << "): ";
      for (std::size_t i = 0; i < s.matched_terms.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << s.matched_terms[i];
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "perfreq: model performance requirements, verify them against the "
      "parameter taxonomy, and generate test environments"};
  app.require_subcommand(1);

  std::string verify_path;
  bool verify_json = false;
  bool verify_strict = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a model file for defects");
  verify_cmd->add_option("file", verify_path, "model CSV file")->required();
  verify_cmd->add_flag("--json", verify_json, "emit the report as JSON");
  verify_cmd->add_flag("--strict", verify_strict,
                       "treat warnings as blocking for the exit code");

  std::string generate_path;
  std::string generate_out;
  CLI::App* generate_cmd = app.add_subcommand(
      "generate", "Generate test environments from a model file");
  generate_cmd->add_option("file", generate_path, "model CSV file")->required();
  generate_cmd->add_option("-o,--output", generate_out,
                           "output JSON path (default: stdout)");

  std::string report_dir;
  bool report_json = false;
  CLI::App* report_cmd = app.add_subcommand(
      "report", "Summarize defects across a directory of model files");
  report_cmd->add_option("dir", report_dir, "directory of model CSV files")
      ->required();
  report_cmd->add_flag("--json", report_json, "emit the summary as JSON");

  std::string suggest_path;
  std::string suggest_lexicon;
  CLI::App* suggest_cmd = app.add_subcommand(
      "suggest", "Suggest performance aspects for requirement sentences");
  suggest_cmd->add_option("file", suggest_path, "text file, one sentence per line")
      ->required();
  suggest_cmd->add_option("--lexicon", suggest_lexicon,
                          "custom lexicon TSV (aspect_id<TAB>term)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kIoError;  // 0 covers --help/--version
  }

  if (*verify_cmd) return run_verify(verify_path, verify_json, verify_strict);
  if (*generate_cmd) return run_generate(generate_path, generate_out);
  if (*report_cmd) return run_report(report_dir, report_json);
  if (*suggest_cmd) return run_suggest(suggest_path, suggest_lexicon);
  return kOk;
}
