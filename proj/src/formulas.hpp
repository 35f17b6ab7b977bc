/**
 * @file formulas.hpp
 * @brief Closed-form polynomial data behind the (b,c) parametrization.
 *
 * Internal header. Each named polynomial is stored as an integer
 * coefficient table over the two parameters and evaluated exactly with
 * nested Horner (inner loop in c, outer in b).
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cuboidcurves/rational.hpp"

namespace cuboidcurves::formulas {

struct Term {
  std::int64_t coef;
  int b_exp;
  int c_exp;
};

class Poly2 {
 public:
  Poly2(std::initializer_list<Term> terms);

  Rat operator()(const Rat& b, const Rat& c) const;

  /// coefficient rows, rows()[i][j] multiplies b^i c^j
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

// Shared denominator of the three seed values e11/e10/e01.
extern const Poly2 e_denominator;

// Numerator polynomials of the nine multisymmetric values. Scalar
// prefactors (b, 1/2, signs) are applied at evaluation time.
extern const Poly2 e11_numerator;
extern const Poly2 e10_numerator;
extern const Poly2 e01_numerator;
extern const Poly2 e12_numerator;
extern const Poly2 e21_numerator;
extern const Poly2 e03_factor_a;
extern const Poly2 e03_factor_b;
extern const Poly2 e30_factor_a;
extern const Poly2 e30_factor_b;
extern const Poly2 e02_numerator;
extern const Poly2 e20_factor_a;
extern const Poly2 e20_factor_b;

// Denominator building blocks shared by several formulas.
extern const Poly2 quartic;          // b^2c^4 - 6b^2c^3 + 13b^2c^2 - 12b^2c + 4b^2 + c^2
extern const Poly2 quartic_variant;  // same with an extra -4c^3 term (printed e21 form)
extern const Poly2 linear_1;         // bc - 1 - b
extern const Poly2 linear_2;         // bc - c - 2b

// Inner polynomials of the curve denominators; Q_i = (3/2) * inner.
extern const Poly2 q1_inner;
extern const Poly2 q2_inner;

// Large numerator polynomials of the curve numerators P_1, P_2.
extern const Poly2 p1_big;
extern const Poly2 p2_big;

}  // namespace cuboidcurves::formulas
