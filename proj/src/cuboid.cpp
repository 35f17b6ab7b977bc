#include "cuboidcurves/cuboid.hpp"

#include "cuboidcurves/errors.hpp"
#include "cuboidcurves/polyroots.hpp"

namespace cuboidcurves {

CuboidPolynomials eval_cuboid_polynomials(const CuboidWitness& w) {
  CuboidPolynomials p;
  p.p0 = w.x1 * w.x1 + w.x2 * w.x2 + w.x3 * w.x3 - w.big_l * w.big_l;
  p.p1 = w.x2 * w.x2 + w.x3 * w.x3 - w.d1 * w.d1;
  p.p2 = w.x3 * w.x3 + w.x1 * w.x1 - w.d2 * w.d2;
  p.p3 = w.x1 * w.x1 + w.x2 * w.x2 - w.d3 * w.d3;
  return p;
}

std::array<Rat, 8> factor_equation_values(const CuboidWitness& w) {
  const CuboidPolynomials p = eval_cuboid_polynomials(w);
  const std::array<Rat, 3> x{w.x1, w.x2, w.x3};
  const std::array<Rat, 3> d{w.d1, w.d2, w.d3};
  const std::array<Rat, 3> pi{p.p1, p.p2, p.p3};
  std::array<Rat, 8> out;
  out[0] = p.p0;
  for (int k = 1; k < 8; ++k) out[k] = 0;
  for (int i = 0; i < 3; ++i) {
    out[1] += pi[i];
    out[2] += d[i] * pi[i];
    out[3] += x[i] * pi[i];
    out[4] += d[i] * d[i] * pi[i];
    out[5] += x[i] * x[i] * pi[i];
    out[6] += x[i] * d[i] * pi[i];
    out[7] += x[i] * x[i] * d[i] * d[i] * pi[i];
  }
  return out;
}

bool check_factor_equations(const CuboidWitness& w) {
  for (const Rat& v : factor_equation_values(w)) {
    if (v != 0) return false;
  }
  return true;
}

WitnessClass theorem_1_1_gate(const CuboidWitness& w) {
  if (!check_factor_equations(w)) return WitnessClass::non_solution;
  const bool positive = w.x1 > 0 && w.x2 > 0 && w.x3 > 0 && w.d1 > 0 &&
                        w.d2 > 0 && w.d3 > 0;
  if (!positive) return WitnessClass::factor_only;
  // the theorem promises the original equations now hold; verify rather
  // than assume
  const CuboidPolynomials p = eval_cuboid_polynomials(w);
  if (p.p0 != 0 || p.p1 != 0 || p.p2 != 0 || p.p3 != 0) {
    throw VerificationError(
        "positivity gate inconsistency: factor equations hold with positive "
        "witness but a cuboid polynomial is nonzero");
  }
  return WitnessClass::full_solution;
}

MultisymmetricProfile elementary_from_roots(const std::array<Rat, 3>& x,
                                            const std::array<Rat, 3>& d) {
  MultisymmetricProfile e;
  e.e10 = x[0] + x[1] + x[2];
  e.e20 = x[0] * x[1] + x[1] * x[2] + x[2] * x[0];
  e.e30 = x[0] * x[1] * x[2];
  e.e01 = d[0] + d[1] + d[2];
  e.e02 = d[0] * d[1] + d[1] * d[2] + d[2] * d[0];
  e.e03 = d[0] * d[1] * d[2];
  e.e21 = x[0] * x[1] * d[2] + x[1] * x[2] * d[0] + x[2] * x[0] * d[1];
  e.e11 = x[0] * d[1] + d[0] * x[1] + x[1] * d[2] + d[1] * x[2] + x[2] * d[0] +
          d[2] * x[0];
  e.e12 = x[0] * d[1] * d[2] + x[1] * d[2] * d[0] + x[2] * d[0] * d[1];
  e.big_l = 1;
  return e;
}

std::vector<Rat> solve_cubic_rational(const Rat& e1, const Rat& e2,
                                      const Rat& e3) {
  return rational_roots({-e3, e2, -e1, Rat(1)});
}

bool check_symmetric_consistency(const std::array<Rat, 3>& x,
                                 const std::array<Rat, 3>& d,
                                 const MultisymmetricProfile& profile) {
  const MultisymmetricProfile e = elementary_from_roots(x, d);
  return e.e10 == profile.e10 && e.e20 == profile.e20 && e.e30 == profile.e30 &&
         e.e01 == profile.e01 && e.e02 == profile.e02 && e.e03 == profile.e03 &&
         e.e21 == profile.e21 && e.e11 == profile.e11 && e.e12 == profile.e12;
}

}  // namespace cuboidcurves
