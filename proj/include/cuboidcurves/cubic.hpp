/**
 * @file cubic.hpp
 * @brief The genus-one curves 2(w^2 - 1) = P alpha^3: membership, the
 *        alpha-lift of sextic-surface points, rational roots of the sextic,
 *        the reduced-cubic root formulas, and the Mordell-form change of
 *        variables.
 */
#pragma once

#include <vector>

#include "cuboidcurves/parametrization.hpp"
#include "cuboidcurves/rational.hpp"

namespace cuboidcurves {

struct CubicCurveSpec {
  Rat p;  // P = 0 is degenerate; operations flag it
};

/// Rational point (b,c,w) of one of the two sextic surfaces
/// D(b,c) (w^2+3)^3 + 4 (w-1)^2 (1+w)^2 = 0.
struct SurfacePoint {
  Rat b;
  Rat c;
  Rat w;
  int branch;  // 1 or 2
};

struct LiftedPoint {
  SurfacePoint point;
  Rat alpha;
};

/// true iff 2(w^2 - 1) = P alpha^3 exactly.
bool cubic_contains(const CubicCurveSpec& spec, const Rat& w, const Rat& alpha);

/// alpha = 2 Q (w^2-1) / (P (w^2+3)); both lift equalities
/// w^2 + 3 = Q alpha^2 and 2(w^2 - 1) = P alpha^3 are verified exactly
/// before returning. Throws ExceptionalPoint for w = +-1 and SingularInput
/// for P = 0 or Q = 0.
Rat lift_alpha(const Rat& q, const Rat& p, const Rat& w);

/// Lift of a surface point through the curve data of its branch at (b,c).
/// Membership in the branch's sextic is checked first.
LiftedPoint alpha_from_surface_point(const SurfacePoint& pt);

/// D value that puts w on the sextic: D = -4 (w^2-1)^2 / (w^2+3)^3.
Rat sextic_d_from_w(const Rat& w);

/// All rational w with D (w^2+3)^3 + 4 (w-1)^2 (1+w)^2 = 0, with
/// multiplicity, ascending. D = 0 yields {-1, -1, 1, 1}.
std::vector<Rat> sextic_rational_roots(const Rat& d);

struct ReducedCubicRoots {
  Rat y1, y2, y3;
};

/// Roots of y^3 + y^2 + D = 0 for the D produced by w:
/// y1 = -2(w+1)/(w^2+3), y2 = 2(w-1)/(w^2+3), y3 = (1-w^2)/(w^2+3).
ReducedCubicRoots reduced_cubic_roots(const Rat& w);

struct MordellPoint {
  Rat x;
  Rat y;
};

/// Y^2 = X^3 + k with k = (P/2)^2 under X = (P/2) alpha, Y = (P/2) w.
class MordellForm {
 public:
  explicit MordellForm(const Rat& p);

  const Rat& k() const { return k_; }
  MordellPoint forward(const Rat& w, const Rat& alpha) const;
  /// Recovers (w, alpha) as {alpha, w} ordering of the curve's own chart.
  struct CubicPoint {
    Rat w;
    Rat alpha;
  };
  CubicPoint inverse(const MordellPoint& pt) const;

 private:
  Rat half_p_;
  Rat k_;
};

/// Throws DegenerateCurve when P = 0.
MordellForm mordell_form(const CubicCurveSpec& spec);

}  // namespace cuboidcurves
