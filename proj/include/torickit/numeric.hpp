#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace torickit {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Integer gcd(const Integer &a, const Integer &b);
Integer lcm(const Integer &a, const Integer &b);

/// Exact parse of "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer &v);
std::string to_string(const Rational &v);

IntVector to_integers(const std::vector<long long> &v);
RatVector to_rationals(const IntVector &v);

/// Dot product; both vectors must have equal length.
Integer dot(const IntVector &a, const IntVector &b);
Rational dot(const RatVector &a, const RatVector &b);
Rational dot(const RatVector &a, const IntVector &b);

/// Clears denominators of a rational vector: returns the primitive integer
/// vector on the same ray (positive multiple). The zero vector maps to zero.
IntVector primitive_integer_multiple(const RatVector &v);

std::string format_vector(const IntVector &v);
std::string format_vector(const RatVector &v);

} // namespace torickit
