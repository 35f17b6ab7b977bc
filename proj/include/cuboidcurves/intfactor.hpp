/**
 * @file intfactor.hpp
 * @brief Factorization-based primitives: prime factorization of integers
 *        and rationals, square-free decomposition, the x^3 = y^2 square/cube
 *        matching, and quadratic-residue tests for arbitrary moduli.
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cuboidcurves/rational.hpp"

namespace cuboidcurves {

struct PrimeFactor {
  Int prime;      // > 1, actually prime
  long exponent;  // nonzero; negative exponents appear for rationals
};

/// sign * prod p_i^e_i with strictly increasing primes.
struct PrimeFactorization {
  int sign = 1;
  std::vector<PrimeFactor> factors;

  Rat reconstruct() const;
};

/// Prime factorization of a nonzero integer (all exponents positive).
/// Trial division up to a fixed cutoff, then Pollard-Brent rho with a
/// BPSW/Miller-Rabin primality gate. Throws on zero input.
PrimeFactorization factorize(const Int& n);

/// Factorization of a nonzero rational; denominator primes carry negative
/// exponents.
PrimeFactorization factorize(const Rat& q);

/// value = squarefree * cofactor^2, squarefree integer carrying the sign,
/// cofactor a positive rational.
struct SquareFreeSplit {
  Int squarefree;
  Rat cofactor;

  Rat reconstruct() const { return Rat(squarefree) * cofactor * cofactor; }
};

SquareFreeSplit square_free_split(const Rat& q);

/// If x^3 = y^2, returns the rational alpha with x = alpha^2, y = alpha^3
/// (alpha = y/x for x != 0, alpha = 0 for x = y = 0); otherwise nullopt.
std::optional<Rat> cube_square_match(const Rat& x, const Rat& y);

/// true iff z^2 = a (mod n) has a solution; n >= 1 (n = 1 is always true).
bool is_square_mod(const Int& a, const Int& n);

bool is_squarefree(const Int& n);

bool is_probable_prime(const Int& n);

/// All positive divisors, ascending.
std::vector<Int> divisors(const Int& n);

}  // namespace cuboidcurves
