#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bsfan {

/// Exact rational number. gmp keeps mpq_class values canonical (lowest terms,
/// positive denominator) under arithmetic; values built from raw
/// numerator/denominator pairs must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "<int>" or "<int>/<posint>". Whitespace, signs on the denominator,
/// leading '+' and zero denominators are rejected with ParseError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& q);

/// True iff q is already in lowest terms with a positive denominator.
bool is_canonical(const Rational& q);

inline Rational rat(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

}  // namespace bsfan
