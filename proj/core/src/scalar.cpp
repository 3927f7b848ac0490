#include "copfaces/scalar.hpp"

#include <cctype>

#include "copfaces/errors.hpp"

namespace copfaces {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("not an exact rational literal: \"" + std::string(text) + "\"");
  }
  if (num[0] == '+') num.remove_prefix(1);
  boost::multiprecision::mpz_int n(std::string{num});
  boost::multiprecision::mpz_int d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Scalar(n, d);
}

std::string to_string(const Scalar& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string to_display(const Scalar& value) {
  if (boost::multiprecision::denominator(value) == 1) return boost::multiprecision::numerator(value).str();
  return to_string(value);
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += to_display(v[k]);
  }
  return out + ")";
}

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) s += a[k] * b[k];
  return s;
}

Scalar random_rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return Scalar(num(rng), den(rng));
}

Scalar random_nonnegative(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> num(0, max_abs_num);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  return Scalar(num(rng), den(rng));
}

}  // namespace copfaces
