#pragma once

// Exact arithmetic vocabulary shared by every module: GMP integers and
// rationals, vectors of them, and the "p/q" text form used in reports.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nok {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Reduced text form: "p/q", or "p" when the denominator is 1.
/// num/den in canonical form. GMP arithmetic and comparisons assume it.
Rational make_rational(const Integer &num, const Integer &den);

std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws
/// Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Integer lcm(const Integer &a, const Integer &b);
Integer gcd(const Integer &a, const Integer &b);

/// Smallest integer >= q.
Integer ceil(const Rational &q);
/// Largest integer <= q.
Integer floor(const Rational &q);

/// Converts to int64, throwing Error(Overflow) when out of range.
std::int64_t to_int64(const Integer &z);

/// lcm of the denominators of the coordinates.
Integer denominator_lcm(const RationalVector &v);

/// Divides by the gcd of all entries (no-op for the zero vector).
void make_primitive(IntVector &v);

/// Lexicographic comparison helpers (GMP classes have no <=>).
int compare(const RationalVector &a, const RationalVector &b);
int compare(const IntVector &a, const IntVector &b);

/// Exact rank of a matrix given as rows (fraction-free elimination).
std::size_t rank(std::vector<IntVector> rows);

/// Scales a rational vector by the lcm of its denominators.
IntVector clear_denominators(const RationalVector &v);

} // namespace nok
