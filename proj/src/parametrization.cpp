#include "cuboidcurves/parametrization.hpp"

#include "cuboidcurves/errors.hpp"
#include "formulas.hpp"

namespace cuboidcurves {

namespace {

using formulas::Poly2;

struct DenominatorValues {
  Rat eden, lin1, lin2, quartic, quartic_variant;
};

DenominatorValues denominator_values(const ParameterPoint& p) {
  return {formulas::e_denominator(p.b, p.c), formulas::linear_1(p.b, p.c),
          formulas::linear_2(p.b, p.c), formulas::quartic(p.b, p.c),
          formulas::quartic_variant(p.b, p.c)};
}

}  // namespace

std::vector<std::string> singular_locus_check(const ParameterPoint& p) {
  const DenominatorValues d = denominator_values(p);
  std::vector<std::string> vanishing;
  if (d.eden == 0) vanishing.push_back("E-denominator");
  if (d.lin1 == 0) vanishing.push_back("bc-1-b");
  if (d.lin2 == 0) vanishing.push_back("bc-c-2b");
  if (d.quartic == 0) vanishing.push_back("quartic");
  if (d.quartic_variant == 0) vanishing.push_back("quartic-variant");
  if (formulas::q1_inner(p.b, p.c) == 0) vanishing.push_back("Q1");
  if (formulas::q2_inner(p.b, p.c) == 0) vanishing.push_back("Q2");
  return vanishing;
}

MultisymmetricProfile elementary_profile(const ParameterPoint& p,
                                         FormulaVariant variant) {
  const DenominatorValues d = denominator_values(p);
  const Rat e21_quartic =
      variant == FormulaVariant::printed ? d.quartic_variant : d.quartic;
  std::vector<std::string> vanishing;
  if (d.eden == 0) vanishing.push_back("E-denominator");
  if (d.lin1 == 0) vanishing.push_back("bc-1-b");
  if (d.lin2 == 0) vanishing.push_back("bc-c-2b");
  if (d.quartic == 0) vanishing.push_back("quartic");
  if (variant == FormulaVariant::printed && d.quartic_variant == 0) {
    vanishing.push_back("quartic-variant");
  }
  if (!vanishing.empty()) {
    std::string msg = "singular parameter point: ";
    for (std::size_t i = 0; i < vanishing.size(); ++i) {
      if (i) msg += ", ";
      msg += vanishing[i];
    }
    throw SingularInput(msg, vanishing);
  }

  const Rat& b = p.b;
  const Rat& c = p.c;
  const Rat squares = d.lin1 * d.lin1 * d.lin2 * d.lin2;
  const Rat half(1, 2);

  MultisymmetricProfile profile;
  profile.e11 = -b * formulas::e11_numerator(b, c) / d.eden;
  profile.e10 = -formulas::e10_numerator(b, c) / d.eden;
  profile.e01 = -b * formulas::e01_numerator(b, c) / d.eden;
  profile.e12 = formulas::e12_numerator(b, c) / (d.quartic * squares);

  Rat e21_num = formulas::e21_numerator(b, c);
  if (variant == FormulaVariant::corrected) {
    // the printed expression carries this numerator term inside its
    // quartic denominator factor
    e21_num -= 4 * c * c * c;
  }
  profile.e21 = half * b * e21_num / (e21_quartic * squares);

  profile.e03 = half * b * formulas::e03_factor_a(b, c) *
                formulas::e03_factor_b(b, c) / (d.quartic * squares);
  profile.e30 = c * b * b * (1 - c) * (c - 2) * formulas::e30_factor_a(b, c) *
                formulas::e30_factor_b(b, c) / (d.quartic * squares);
  profile.e02 = half * formulas::e02_numerator(b, c) / squares;
  profile.e20 =
      half * b * formulas::e20_factor_a(b, c) * formulas::e20_factor_b(b, c) / squares;
  profile.big_l = 1;
  return profile;
}

bool check_master_identity(const Rat& e10, const Rat& e01, const Rat& e11,
                           const Rat& big_l) {
  const Rat t1 = 2 * e11;
  const Rat t2 = e01 * e01 + big_l * big_l - e10 * e10;
  return t1 * t1 + t2 * t2 - 8 * e01 * e01 * big_l * big_l == 0;
}

CurvePair curve_pair(const ParameterPoint& p) {
  const Rat quartic = formulas::quartic(p.b, p.c);
  std::vector<std::string> vanishing;
  if (quartic == 0) vanishing.push_back("quartic");
  const Rat q1_inner = formulas::q1_inner(p.b, p.c);
  const Rat q2_inner = formulas::q2_inner(p.b, p.c);
  if (q1_inner == 0) vanishing.push_back("Q1");
  if (q2_inner == 0) vanishing.push_back("Q2");
  if (!vanishing.empty()) {
    throw SingularInput("curve data undefined at parameter point", vanishing);
  }
  const Rat half(1, 2);
  const Rat three_halves(3, 2);
  CurvePair pair;
  pair.q1 = three_halves * q1_inner;
  pair.q2 = three_halves * q2_inner;
  pair.p1 = half * formulas::p1_big(p.b, p.c) / quartic;
  pair.p2 = half * p.b * formulas::p2_big(p.b, p.c) / quartic;
  pair.d1 = -pair.p1 * pair.p1 / (pair.q1 * pair.q1 * pair.q1);
  pair.d2 = -pair.p2 * pair.p2 / (pair.q2 * pair.q2 * pair.q2);
  return pair;
}

Rat d1_direct(const ParameterPoint& p) {
  const Rat quartic = formulas::quartic(p.b, p.c);
  const Rat inner = formulas::q1_inner(p.b, p.c);
  if (quartic == 0 || inner == 0) {
    throw SingularInput("D1 undefined at parameter point",
                        {quartic == 0 ? "quartic" : "Q1"});
  }
  const Rat big = formulas::p1_big(p.b, p.c);
  return Rat(-2, 27) * big * big / (inner * inner * inner * quartic * quartic);
}

Rat d2_direct(const ParameterPoint& p) {
  const Rat quartic = formulas::quartic(p.b, p.c);
  const Rat inner = formulas::q2_inner(p.b, p.c);
  if (quartic == 0 || inner == 0) {
    throw SingularInput("D2 undefined at parameter point",
                        {quartic == 0 ? "quartic" : "Q2"});
  }
  const Rat big = formulas::p2_big(p.b, p.c);
  return Rat(-2, 27) * p.b * p.b * big * big /
         (inner * inner * inner * quartic * quartic);
}

}  // namespace cuboidcurves
