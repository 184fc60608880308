#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "perfreq/model.hpp"

namespace perfreq {

// One ranked guess for the aspect a requirement sentence talks about.
struct AspectSuggestion {
  Aspect aspect = Aspect::TimeBehavior;
  int score = 0;  // number of distinct lexicon terms that matched
  std::vector<std::string> matched_terms;

  friend bool operator==(const AspectSuggestion&,
                         const AspectSuggestion&) = default;
};

// Keyword lexicon mapping aspects to indicator terms. Matching is
// case-insensitive on whole words (a phrase term matches as a word
// sequence); it suggests, never decides.
class Lexicon {
 public:
  // Parses "aspect_id<TAB>term" lines; '#' starts a comment line, blank
  // lines are ignored. Throws std::invalid_argument on a malformed line or
  // unknown aspect id.
  static Lexicon parse(std::string_view tsv_text);

  // Built-in lexicon; identical to the shipped data file.
  static const Lexicon& default_lexicon();

  // The text the default lexicon is built from (the data file's content).
  static std::string_view default_text();

  // Suggestions ranked by score descending, then aspect id ascending.
  // matched_terms are sorted. Empty when nothing matches.
  std::vector<AspectSuggestion> suggest(std::string_view sentence) const;

  const std::map<Aspect, std::vector<std::string>>& terms() const {
    return terms_;
  }

 private:
  // terms are stored lowercased with collapsed whitespace
  std::map<Aspect, std::vector<std::string>> terms_;
};

}  // namespace perfreq
