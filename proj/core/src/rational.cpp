#include "perfreq/rational.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace perfreq {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (!all_digits(s)) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::int64_t> mul_add(std::int64_t a, std::int64_t b,
                                    std::int64_t c) {
  __int128 r = static_cast<__int128>(a) * b + c;
  if (r > INT64_MAX || r < INT64_MIN) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool neg = false;
  if (text.front() == '-' || text.front() == '+') {
    neg = text.front() == '-';
    text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
  }

  auto finish = [neg](std::int64_t n, std::int64_t d) -> std::optional<Rational> {
    if (d == 0) return std::nullopt;
    return Rational(neg ? -n : n, d);
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d) return std::nullopt;
    return finish(*n, *d);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (!all_digits(int_part) || !all_digits(frac_part)) return std::nullopt;
    if (frac_part.size() > 18) return std::nullopt;
    auto i = parse_int(int_part);
    auto f = parse_int(frac_part);
    if (!i || !f) return std::nullopt;
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac_part.size(); ++k) scale *= 10;
    auto n = mul_add(*i, scale, *f);
    if (!n) return std::nullopt;
    return finish(*n, scale);
  }

  auto n = parse_int(text);
  if (!n) return std::nullopt;
  return finish(*n, 1);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num) * o.den;
  __int128 rhs = static_cast<__int128>(o.num) * den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace perfreq
