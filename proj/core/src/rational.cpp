#include "primcover/rational.hpp"

#include <charconv>

#include "primcover/error.hpp"

namespace primcover {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::BadInput, "not a rational: '" + whole + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, text));
  const auto num = parse_int(std::string_view(text).substr(0, slash), text);
  const auto den = parse_int(std::string_view(text).substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::BadInput, "zero denominator: '" + text + "'");
  return Rational(num, den);
}

std::int64_t floor(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();
  auto q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

}  // namespace primcover
