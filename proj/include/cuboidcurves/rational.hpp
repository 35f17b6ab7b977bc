/**
 * @file rational.hpp
 * @brief Exact rational scalar type used throughout the library.
 *
 * Every quantity in this project is an exact rational number; no floating
 * point is used anywhere. GMP's mpq_class provides the canonical-form
 * invariants we rely on (reduced fraction, positive denominator), and the
 * helpers here add the parsing/formatting and square-root primitives the
 * rest of the library needs.
 */
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace cuboidcurves {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds a reduced rational with positive denominator. Throws ParseError
/// on a zero denominator.
Rat make_rat(const Int& numerator, const Int& denominator);

/// Parses "p", "p/q" or "-p/q" (arbitrary precision). Throws ParseError on
/// malformed input or zero denominator.
Rat rat_from_string(std::string_view text);

/// Serializes as "p/q", or plain "p" for integral values. Never a float.
std::string rat_to_string(const Rat& value);

std::string int_to_string(const Int& value);

inline Int numerator(const Rat& q) { return q.get_num(); }
inline Int denominator(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Rat rat_pow(const Rat& base, unsigned long exponent);
Int int_pow(const Int& base, unsigned long exponent);

/// Floor square root of a nonnegative integer.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// Exact rational square root, when one exists. Negative input or a
/// non-square value yields nullopt.
std::optional<Rat> rat_sqrt(const Rat& q);

}  // namespace cuboidcurves
