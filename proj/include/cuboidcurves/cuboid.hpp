/**
 * @file cuboid.hpp
 * @brief Ground-truth verification layer: the four cuboid polynomials, the
 *        eight factor equations, the positivity gate, elementary
 *        multisymmetric values of explicit roots, and rational cubic
 *        solving. Deliberately independent of the parametrization formulas
 *        so it can act as an oracle for everything built on them.
 */
#pragma once

#include <array>
#include <vector>

#include "cuboidcurves/parametrization.hpp"
#include "cuboidcurves/rational.hpp"

namespace cuboidcurves {

struct CuboidWitness {
  Rat x1, x2, x3;  // edges
  Rat d1, d2, d3;  // face diagonals
  Rat big_l;       // space diagonal
};

struct CuboidPolynomials {
  Rat p0, p1, p2, p3;
};

/// p0 = x1^2+x2^2+x3^2-L^2, p1 = x2^2+x3^2-d1^2, p2 = x3^2+x1^2-d2^2,
/// p3 = x1^2+x2^2-d3^2.
CuboidPolynomials eval_cuboid_polynomials(const CuboidWitness& wit);

/// The eight factor-equation left-hand sides, as a flat list:
/// p0, sum p_i, sum d_i p_i, sum x_i p_i, sum d_i^2 p_i, sum x_i^2 p_i,
/// sum x_i d_i p_i, sum x_i^2 d_i^2 p_i.
std::array<Rat, 8> factor_equation_values(const CuboidWitness& wit);

/// true iff all eight vanish exactly.
bool check_factor_equations(const CuboidWitness& wit);

enum class WitnessClass { full_solution, factor_only, non_solution };

/// non_solution if the factor equations fail; full_solution if they hold
/// together with all six strict positivity conditions (in which case the
/// original cuboid equations are re-evaluated and must vanish; a machine
/// check of the underlying theorem); factor_only otherwise.
WitnessClass theorem_1_1_gate(const CuboidWitness& wit);

/// The nine elementary multisymmetric values of explicit root triples;
/// big_l is set to 1.
MultisymmetricProfile elementary_from_roots(const std::array<Rat, 3>& x,
                                            const std::array<Rat, 3>& d);

/// All rational roots (with multiplicity) of t^3 - e1 t^2 + e2 t - e3 = 0.
std::vector<Rat> solve_cubic_rational(const Rat& e1, const Rat& e2,
                                      const Rat& e3);

/// true iff elementary_from_roots(x, d) equals profile in all nine
/// components; this simultaneously checks that x and d are root triples of
/// the two cubics and that the mixed equations hold.
bool check_symmetric_consistency(const std::array<Rat, 3>& x,
                                 const std::array<Rat, 3>& d,
                                 const MultisymmetricProfile& profile);

}  // namespace cuboidcurves
