#include "perfreq/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace perfreq {

namespace {

// Mirror of data/lexicon.tsv; the build ships the file for users to extend,
// this copy keeps the library self-contained. A test asserts both stay in
// sync.
constexpr std::string_view kDefaultLexicon =
    R"LEX(# Aspect suggestion lexicon.
# Format: aspect_id<TAB>term (one per line, '#' starts a comment).
# Terms are matched case-insensitively as whole words; multi-word terms
# match as a word sequence.
time_behavior	response time
time_behavior	response
time_behavior	latency
time_behavior	delay
time_behavior	responsiveness
time_behavior	timing
time_behavior	wait time
time_behavior	turnaround time
time_behavior	second
time_behavior	seconds
time_behavior	sec
time_behavior	secs
time_behavior	millisecond
time_behavior	milliseconds
time_behavior	ms
time_behavior	minute
time_behavior	minutes
capacity	capacity
capacity	load
capacity	volume
capacity	scalability
capacity	peak
capacity	spike
capacity	stress
capacity	workload
capacity	concurrent users
capacity	simultaneous users
capacity	concurrent requests
capacity	users
capacity	sessions
capacity	connections
capacity	nodes
capacity	stations
capacity	transactions
speed_throughput	speed
speed_throughput	throughput
speed_throughput	thruput
speed_throughput	rate
speed_throughput	per second
speed_throughput	per minute
speed_throughput	per hour
speed_throughput	requests per second
speed_throughput	transactions per second
resource_constraint	resource
resource_constraint	resources
resource_constraint	utilization
resource_constraint	consumption
resource_constraint	memory
resource_constraint	ram
resource_constraint	rom
resource_constraint	cpu
resource_constraint	processor
resource_constraint	disk
resource_constraint	storage
resource_constraint	megabyte
resource_constraint	megabytes
resource_constraint	mb
resource_constraint	gigabyte
resource_constraint	gigabytes
resource_constraint	gb
resource_constraint	network
resource_constraint	bandwidth
resource_constraint	footprint
efficiency	efficiency
efficiency	efficient
efficiency	efficiently
efficiency	overhead
efficiency	optimal
efficiency	optimized
)LEX";

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

// lowercase and collapse whitespace runs to single spaces
std::string normalize(std::string_view s) {
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

bool contains_word(const std::string& text, const std::string& term) {
  std::size_t pos = 0;
  while ((pos = text.find(term, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !word_char(text[pos - 1]);
    std::size_t end = pos + term.size();
    bool right_ok = end == text.size() || !word_char(text[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

}  // namespace

Lexicon Lexicon::parse(std::string_view tsv_text) {
  Lexicon lex;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= tsv_text.size()) {
    std::size_t nl = tsv_text.find('\n', start);
    std::string_view line = tsv_text.substr(
        start, nl == std::string_view::npos ? std::string_view::npos
                                            : nl - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos) {
        throw std::invalid_argument("lexicon line " + std::to_string(line_no) +
                                    ": expected aspect_id<TAB>term");
      }
      auto aspect = aspect_from_id(line.substr(0, tab));
      if (!aspect) {
        throw std::invalid_argument("lexicon line " + std::to_string(line_no) +
                                    ": unknown aspect id \"" +
                                    std::string(line.substr(0, tab)) + "\"");
      }
      std::string term = normalize(line.substr(tab + 1));
      if (term.empty()) {
        throw std::invalid_argument("lexicon line " + std::to_string(line_no) +
                                    ": empty term");
      }
      auto& terms = lex.terms_[*aspect];
      if (std::find(terms.begin(), terms.end(), term) == terms.end())
        terms.push_back(term);
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lex;
}

const Lexicon& Lexicon::default_lexicon() {
  static const Lexicon lex = parse(kDefaultLexicon);
  return lex;
}

std::string_view Lexicon::default_text() { return kDefaultLexicon; }

std::vector<AspectSuggestion> Lexicon::suggest(
    std::string_view sentence) const {
  std::string text = normalize(sentence);
  std::vector<AspectSuggestion> out;
  for (const auto& [aspect, terms] : terms_) {
    AspectSuggestion s;
    s.aspect = aspect;
    for (const std::string& term : terms) {
      if (contains_word(text, term)) s.matched_terms.push_back(term);
    }
    s.score = static_cast<int>(s.matched_terms.size());
    if (s.score > 0) {
      std::sort(s.matched_terms.begin(), s.matched_terms.end());
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AspectSuggestion& a, const AspectSuggestion& b) {
              if (a.score != b.score) return a.score > b.score;
              return aspect_id(a.aspect) < aspect_id(b.aspect);
            });
  return out;
}

}  // namespace perfreq
