// Test-side oracles, kept independent of the library code paths they
// check: exhaustive searches, brute-force scans and deterministic random
// rational generators.
#pragma once

#include <optional>
#include <random>
#include <vector>

#include "cuboidcurves/parametrization.hpp"
#include "cuboidcurves/rational.hpp"

namespace oracle {

using cuboidcurves::Int;
using cuboidcurves::Rat;

inline Rat random_rat(std::mt19937& rng, long max_abs_num, long max_den,
                      bool allow_zero = true) {
  std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long> den(1, max_den);
  for (;;) {
    const long n = num(rng);
    if (!allow_zero && n == 0) continue;
    return cuboidcurves::make_rat(Int(n), Int(den(rng)));
  }
}

/// Uniformly random non-singular parameter point.
inline cuboidcurves::ParameterPoint random_point(std::mt19937& rng,
                                                 long max_abs = 100) {
  for (;;) {
    cuboidcurves::ParameterPoint p{random_rat(rng, max_abs, max_abs),
                                   random_rat(rng, max_abs, max_abs)};
    if (cuboidcurves::singular_locus_check(p).empty()) return p;
  }
}

/// Exhaustive residue search: is a a square mod n?
inline bool square_mod_exhaustive(const Int& a, const Int& n) {
  Int target = a % n;
  if (target < 0) target += n;
  for (Int z = 0; z < n; ++z) {
    if ((z * z) % n == target) return true;
  }
  return false;
}

/// Plain exhaustive search over the bounded box X^2 <= 3 MN, |Y| <= 2,
/// Z^2 <= MN for a nonzero solution of X^2 - MN Y^2 + 3 Z^2 = 0. Sign
/// flips cover the remaining octants, so existence over the box decides
/// solvability (the box bound is the Holzer bound of the reduced form).
inline bool legendre_search_exhaustive(const Int& mn) {
  if (mn <= 0) return false;
  for (Int x = 0; x * x <= 3 * mn; ++x) {
    for (Int y = 0; y <= 2; ++y) {
      for (Int z = 0; z * z <= mn; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (x * x - mn * y * y + 3 * z * z == 0) return true;
      }
    }
  }
  return false;
}

/// Brute-force scan for any affine rational point on w^2 + 3 = Q alpha^2
/// with w = p/q, |p|, |q| <= height.
inline bool conic_has_point_brute(const Rat& big_q, long height) {
  for (long q = 1; q <= height; ++q) {
    for (long p = -height; p <= height; ++p) {
      const Rat w = cuboidcurves::make_rat(Int(p), Int(q));
      const Rat rhs = (w * w + 3) / big_q;
      if (rhs > 0 && cuboidcurves::rat_sqrt(rhs)) return true;
    }
  }
  return false;
}

}  // namespace oracle
