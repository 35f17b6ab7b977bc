/**
 * @file polyroots.hpp
 * @brief Exact rational roots of univariate polynomials with rational
 *        coefficients (rational root theorem + synthetic division).
 */
#pragma once

#include <vector>

#include "cuboidcurves/rational.hpp"

namespace cuboidcurves {

/// All rational roots, with multiplicity, of the nonzero polynomial
/// sum_i coeffs[i] x^i. Sorted ascending. Throws on the zero polynomial.
std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs);

/// Exact evaluation of sum_i coeffs[i] x^i by Horner.
Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x);

}  // namespace cuboidcurves
