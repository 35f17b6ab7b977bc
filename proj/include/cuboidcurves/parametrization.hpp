/**
 * @file parametrization.hpp
 * @brief Closed-form evaluation of the two-parameter solution family: the
 *        nine elementary multisymmetric values, the master identity check,
 *        the curve data (Q1, P1, D1, Q2, P2, D2), and the singular locus of
 *        all denominators.
 */
#pragma once

#include <string>
#include <vector>

#include "cuboidcurves/rational.hpp"

namespace cuboidcurves {

struct ParameterPoint {
  Rat b;
  Rat c;
};

/// One printed formula has two plausible readings of where its "-4c^3" term
/// belongs. `printed` evaluates the expression exactly as typeset (the term
/// sits inside the quartic denominator factor); `corrected` moves it into
/// the numerator over the plain quartic, the reading consistent with the
/// factor-equation system. Only the e21 component differs.
enum class FormulaVariant { printed, corrected };

struct MultisymmetricProfile {
  Rat e10, e20, e30;
  Rat e01, e02, e03;
  Rat e21, e11, e12;
  Rat big_l;  // space diagonal; always 1 for profiles from a ParameterPoint
};

/// Curve data at a fixed parameter point. Both cubic relations
/// d1*q1^3 + p1^2 = 0 and d2*q2^3 + p2^2 = 0 hold exactly by construction.
struct CurvePair {
  Rat q1, p1, d1;
  Rat q2, p2, d2;
};

/// Identifiers of the denominator factors that vanish at p, in a fixed
/// check order: "E-denominator", "bc-1-b", "bc-c-2b", "quartic",
/// "quartic-variant", "Q1", "Q2". Empty means every formula is defined.
std::vector<std::string> singular_locus_check(const ParameterPoint& p);

/// The nine multisymmetric values at p (with big_l = 1). Throws
/// SingularInput naming the vanishing factors when any denominator used by
/// the chosen variant vanishes.
MultisymmetricProfile elementary_profile(
    const ParameterPoint& p, FormulaVariant variant = FormulaVariant::printed);

/// true iff (2 e11)^2 + (e01^2 + L^2 - e10^2)^2 - 8 e01^2 L^2 = 0 exactly.
bool check_master_identity(const Rat& e10, const Rat& e01, const Rat& e11,
                           const Rat& big_l);

/// Q1, Q2, P1, P2 from their closed forms; D1 = -P1^2/Q1^3,
/// D2 = -P2^2/Q2^3. Throws SingularInput when the shared quartic
/// denominator or either Q vanishes.
CurvePair curve_pair(const ParameterPoint& p);

/// D-parameters evaluated through their own printed expansions
/// (-2/27 * big^2 / (inner^3 * quartic^2) shape) rather than through
/// P and Q. Equal to curve_pair's d1/d2; kept as an independent
/// evaluation path for cross-checks.
Rat d1_direct(const ParameterPoint& p);
Rat d2_direct(const ParameterPoint& p);

}  // namespace cuboidcurves
