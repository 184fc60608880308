#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "perfreq/model.hpp"

namespace perfreq {

// Whole-file failure: unreadable input, empty file, missing or malformed
// header. Row-level problems never throw; they land in ParseResult::errors.
class CsvFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  UnknownAspect,
  MissingField,
  BadValue,
  BadComparator,
  BadFlag,
  BadRow,
  InconsistentModel,
};

struct ParseError {
  std::size_t line = 0;  // 1-based line number in the input
  ParseErrorKind kind = ParseErrorKind::BadRow;
  std::string message;
  std::string requirement_id;  // empty when the row never got that far

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

struct ParseResult {
  std::vector<Model> models;
  std::vector<ParseError> errors;
  // Non-fatal remarks, e.g. which comparator default fired on which row.
  std::vector<std::string> notes;
};

// Expected header (exact names, exact order):
//   model_id,object,condition,aspect,requirement_id,description,
//   value,unit,comparator,quantifiable
//
// Rows are grouped by model_id (first-appearance order); each parameter is
// placed into the independent or dependent list by its aspect's role.
// Malformed rows are skipped and reported; parsing never aborts on a row.
// Throws CsvFileError on empty input or a bad header.
ParseResult parse_models(std::string_view csv_text);

// Inverse of parse_models for well-formed models: one row per parameter,
// independent first, RFC 4180 quoting where needed. parse(serialize(m)) == m.
std::string serialize_models(const std::vector<Model>& models);

}  // namespace perfreq
