#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cartan {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses "3", "-2/7" and similar; the result is canonicalized.
Rational parse_rational(const std::string& text);

/// "3", "-2/7"; never a trailing "/1".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Converts an integral rational; throws DomainError otherwise or on overflow.
long to_long(const Rational& q);

Rational dot(const RationalVector& a, const RationalVector& b);

RationalVector& axpy(RationalVector& y, const Rational& a, const RationalVector& x);

}  // namespace cartan
