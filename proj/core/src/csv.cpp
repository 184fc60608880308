#include "perfreq/csv.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "perfreq/taxonomy.hpp"

namespace perfreq {

namespace {

constexpr std::array<std::string_view, 10> kColumns = {
    "model_id", "object",      "condition", "aspect", "requirement_id",
    "description", "value", "unit", "comparator", "quantifiable"};

struct RawRecord {
  std::size_t line = 0;  // line the record starts on
  std::vector<std::string> fields;
};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return std::string(s);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

// RFC 4180 tokenizer. Quoted fields keep their content verbatim (with ""
// unescaped); unquoted fields are trimmed. Records may span lines inside
// quotes.
std::vector<RawRecord> split_records(std::string_view text) {
  std::vector<RawRecord> records;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    RawRecord rec;
    rec.line = line;
    bool done = false;
    while (!done) {
      std::string field;
      bool quoted = false;
      if (i < n && text[i] == '"') {
        quoted = true;
        ++i;
        while (i < n) {
          char c = text[i];
          if (c == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              field += '"';
              i += 2;
            } else {
              ++i;
              break;
            }
          } else {
            if (c == '\n') ++line;
            field += c;
            ++i;
          }
        }
        // trailing junk after the closing quote up to the next separator is
        // ignored
        while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r')
          ++i;
      } else {
        while (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          field += text[i];
          ++i;
        }
      }
      rec.fields.push_back(quoted ? field : trim(field));

      if (i >= n) {
        done = true;
      } else if (text[i] == ',') {
        ++i;
      } else {
        if (text[i] == '\r') ++i;
        if (i < n && text[i] == '\n') {
          ++i;
          ++line;
        }
        done = true;
      }
    }
    bool blank = rec.fields.size() == 1 && rec.fields[0].empty();
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

std::string five_aspects() {
  std::string out;
  std::array<std::string, 5> ids;
  for (std::size_t i = 0; i < kAllAspects.size(); ++i)
    ids[i] = std::string(aspect_id(kAllAspects[i]));
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  return out;
}

Comparator default_comparator(Aspect aspect, const std::string& description) {
  switch (aspect) {
    case Aspect::TimeBehavior:
    case Aspect::ResourceConstraint:
    case Aspect::Efficiency:
      return Comparator::Le;
    case Aspect::SpeedThroughput:
      return Comparator::Ge;
    case Aspect::Capacity:
      return lower(description).find("at least") != std::string::npos
                 ? Comparator::Ge
                 : Comparator::Le;
  }
  throw std::logic_error("unhandled aspect");
}

bool needs_quoting(const std::string& f) {
  if (f.empty()) return false;
  if (f.find_first_of(",\"\n\r") != std::string::npos) return true;
  return std::isspace(static_cast<unsigned char>(f.front())) ||
         std::isspace(static_cast<unsigned char>(f.back()));
}

std::string quote_field(const std::string& f) {
  if (!needs_quoting(f)) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

struct ModelDraft {
  std::string object;
  std::string condition;
  std::vector<Parameter> independent;
  std::vector<Parameter> dependent;
};

}  // namespace

ParseResult parse_models(std::string_view csv_text) {
  std::vector<RawRecord> records = split_records(csv_text);
  if (records.empty()) throw CsvFileError("empty input");

  const RawRecord& header = records.front();
  std::string expected;
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i) expected += ',';
    expected += kColumns[i];
  }
  if (header.fields.size() != kColumns.size() ||
      !std::equal(header.fields.begin(), header.fields.end(),
                  kColumns.begin())) {
    throw CsvFileError("bad header; expected: " + expected);
  }

  ParseResult result;
  std::vector<std::string> model_order;
  std::map<std::string, ModelDraft> drafts;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const RawRecord& rec = records[r];
    auto fail = [&](ParseErrorKind kind, std::string message,
                    std::string req_id = "") {
      result.errors.push_back(
          {rec.line, kind, std::move(message), std::move(req_id)});
    };

    if (rec.fields.size() != kColumns.size()) {
      fail(ParseErrorKind::BadRow,
           "expected " + std::to_string(kColumns.size()) + " fields, got " +
               std::to_string(rec.fields.size()));
      continue;
    }
    const std::string& model_id = rec.fields[0];
    const std::string& object = rec.fields[1];
    const std::string& condition = rec.fields[2];
    const std::string& aspect_text = rec.fields[3];
    const std::string& req_id = rec.fields[4];
    const std::string& description = rec.fields[5];
    const std::string& value_text = rec.fields[6];
    const std::string& unit = rec.fields[7];
    const std::string& comparator_text = rec.fields[8];
    const std::string& flag_text = rec.fields[9];

    if (model_id.empty()) {
      fail(ParseErrorKind::MissingField, "missing model_id", req_id);
      continue;
    }
    if (object.empty()) {
      fail(ParseErrorKind::MissingField, "missing object", req_id);
      continue;
    }
    if (req_id.empty()) {
      fail(ParseErrorKind::MissingField, "missing requirement_id");
      continue;
    }
    if (description.empty()) {
      fail(ParseErrorKind::MissingField, "missing description", req_id);
      continue;
    }

    auto aspect = aspect_from_id(aspect_text);
    if (!aspect) {
      fail(ParseErrorKind::UnknownAspect,
           "aspect \"" + aspect_text + "\" is not a performance aspect" +
               "; expected one of: " + five_aspects(),
           req_id);
      continue;
    }

    bool quantifiable = true;
    if (!flag_text.empty()) {
      std::string f = lower(flag_text);
      if (f == "true") quantifiable = true;
      else if (f == "false") quantifiable = false;
      else {
        fail(ParseErrorKind::BadFlag,
             "quantifiable must be true or false, got \"" + flag_text + "\"",
             req_id);
        continue;
      }
    }

    std::optional<Quantity> quantity;
    if (!value_text.empty()) {
      auto value = Rational::parse(value_text);
      if (!value) {
        fail(ParseErrorKind::BadValue,
             "cannot parse value \"" + value_text + "\"", req_id);
        continue;
      }
      if (value->negative()) {
        fail(ParseErrorKind::BadValue, "negative value \"" + value_text + "\"",
             req_id);
        continue;
      }
      if (unit.empty()) {
        fail(ParseErrorKind::BadValue, "value without a unit", req_id);
        continue;
      }
      if (!quantifiable) {
        fail(ParseErrorKind::BadFlag,
             "row carries a value but is marked quantifiable=false", req_id);
        continue;
      }
      Comparator cmp;
      if (comparator_text.empty()) {
        cmp = default_comparator(*aspect, description);
        result.notes.push_back(
            "line " + std::to_string(rec.line) + ": defaulted comparator to " +
            std::string(comparator_str(cmp)) + " for " +
            std::string(aspect_id(*aspect)) + " (" + req_id + ")");
      } else {
        auto parsed = comparator_from(comparator_text);
        if (!parsed) {
          fail(ParseErrorKind::BadComparator,
               "cannot parse comparator \"" + comparator_text + "\"", req_id);
          continue;
        }
        cmp = *parsed;
      }
      quantity = Quantity{*value, unit, cmp};
    } else {
      if (!unit.empty()) {
        fail(ParseErrorKind::BadValue, "unit without a value", req_id);
        continue;
      }
      if (!comparator_text.empty()) {
        fail(ParseErrorKind::BadComparator, "comparator without a value",
             req_id);
        continue;
      }
    }

    auto it = drafts.find(model_id);
    if (it == drafts.end()) {
      it = drafts.emplace(model_id, ModelDraft{object, condition, {}, {}})
               .first;
      model_order.push_back(model_id);
    } else if (it->second.object != object ||
               it->second.condition != condition) {
      fail(ParseErrorKind::InconsistentModel,
           "model " + model_id + " already has object \"" + it->second.object +
               "\" / condition \"" + it->second.condition + "\"",
           req_id);
      continue;
    }

    ModelDraft& draft = it->second;
    Role role = classify_role(*aspect);
    std::vector<Parameter>& target =
        role == Role::Independent ? draft.independent : draft.dependent;
    std::string param_id = model_id +
                           (role == Role::Independent ? ".i" : ".d") +
                           std::to_string(target.size() + 1);
    target.push_back(make_parameter(param_id, req_id, *aspect, description,
                                    std::move(quantity), quantifiable));
  }

  for (const std::string& id : model_order) {
    ModelDraft& d = drafts.at(id);
    result.models.push_back(make_model(id, d.object, d.condition,
                                       std::move(d.independent),
                                       std::move(d.dependent)));
  }
  return result;
}

std::string serialize_models(const std::vector<Model>& models) {
  std::string out;
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  out += '\n';

  auto write_param = [&out](const Model& m, const Parameter& p) {
    std::vector<std::string> fields;
    fields.push_back(m.model_id);
    fields.push_back(m.object);
    fields.push_back(m.condition);
    fields.push_back(std::string(aspect_id(p.aspect)));
    fields.push_back(p.requirement_id);
    fields.push_back(p.description);
    if (p.quantity) {
      fields.push_back(p.quantity->value.str());
      fields.push_back(p.quantity->unit);
      fields.push_back(std::string(comparator_str(p.quantity->comparator)));
    } else {
      fields.push_back("");
      fields.push_back("");
      fields.push_back("");
    }
    fields.push_back(p.quantifiable ? "true" : "false");
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += quote_field(fields[i]);
    }
    out += '\n';
  };

  for (const Model& m : models) {
    for (const Parameter& p : m.independent) write_param(m, p);
    for (const Parameter& p : m.dependent) write_param(m, p);
  }
  return out;
}

}  // namespace perfreq
