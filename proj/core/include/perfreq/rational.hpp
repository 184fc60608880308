#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace perfreq {

// Exact rational number. Always normalized: den > 0, gcd(|num|, den) == 1.
// Used for requirement quantities so counts and comparisons never suffer
// floating point drift.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  Rational(std::int64_t n) : num(n), den(1) {}

  // Accepts "10", "-3", "2.5", "7/2". Whitespace is not allowed.
  // Returns nullopt on malformed input, zero denominator, or overflow.
  static std::optional<Rational> parse(std::string_view text);

  // "10" when den == 1, otherwise "7/2".
  std::string str() const;

  bool negative() const { return num < 0; }

  friend bool operator==(const Rational&, const Rational&) = default;
  std::strong_ordering operator<=>(const Rational& o) const;
};

}  // namespace perfreq
