#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace msi {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Canonical rational num/den (lowest terms, positive denominator).
Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Narrowing conversion; throws if the value does not fit.
std::int64_t to_int64(const Integer& z);

/// `p/q` in lowest terms with q > 0, or `p` when q == 1.
std::string to_string(const Rational& q);

/// Decimal echo with `digits` significant digits, round-half-even.
std::string to_decimal(const Rational& q, int digits = 12);

/// Accepts `p`, `p/q`, or a finite decimal such as `-1.25`.
Rational parse_rational(std::string_view text);

std::string to_string(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace msi
