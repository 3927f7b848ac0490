#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace copfaces {

/// Exact rational scalar. Every comparison in the library is exact; there is
/// no tolerance anywhere outside explicitly labeled floating diagnostics.
using Scalar = boost::multiprecision::mpq_rational;

/// Plain coordinate vector (not necessarily on the simplex).
using Vector = std::vector<Scalar>;

using Rng = std::mt19937_64;

/// Parses "a", "-a" or "a/b" (b != 0). Throws ParseError on anything else,
/// including decimal points and exponents.
Scalar parse_scalar(std::string_view text);

/// Canonical "a/b" form in lowest terms with a positive denominator. Integers
/// are written with denominator 1.
std::string to_string(const Scalar& value);

/// Short human form: "a" for integers, "a/b" otherwise.
std::string to_display(const Scalar& value);

std::string to_string(const Vector& v);

inline int sign(const Scalar& value) { return value.sign(); }

Scalar dot(const Vector& a, const Vector& b);

/// Uniform rational with numerator in [-max_abs_num, max_abs_num] and
/// denominator in [1, max_den].
Scalar random_rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den);

/// Uniform rational in [0, max_abs_num] with denominator in [1, max_den].
Scalar random_nonnegative(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den);

}  // namespace copfaces
