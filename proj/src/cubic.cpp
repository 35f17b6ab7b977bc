#include "cuboidcurves/cubic.hpp"

#include <algorithm>

#include "cuboidcurves/errors.hpp"
#include "cuboidcurves/polyroots.hpp"

namespace cuboidcurves {

bool cubic_contains(const CubicCurveSpec& spec, const Rat& w, const Rat& alpha) {
  return 2 * (w * w - 1) == spec.p * alpha * alpha * alpha;
}

Rat lift_alpha(const Rat& q, const Rat& p, const Rat& w) {
  if (q == 0 || p == 0) {
    throw SingularInput("alpha-lift undefined: P or Q vanishes",
                        {q == 0 ? "Q" : "P"});
  }
  if (w == 1 || w == -1) {
    throw ExceptionalPoint("w = +-1 is an exceptional base point of the cubic");
  }
  const Rat w2 = w * w;
  const Rat alpha = 2 * q * (w2 - 1) / (p * (w2 + 3));
  if (w2 + 3 != q * alpha * alpha || 2 * (w2 - 1) != p * alpha * alpha * alpha) {
    throw Error("alpha-lift failed: point is not on the surface of its branch");
  }
  return alpha;
}

namespace {

bool on_sextic(const Rat& d, const Rat& w) {
  const Rat w2 = w * w;
  const Rat s = w2 + 3;
  return d * s * s * s + 4 * (w - 1) * (w - 1) * (1 + w) * (1 + w) == 0;
}

}  // namespace

LiftedPoint alpha_from_surface_point(const SurfacePoint& pt) {
  if (pt.branch != 1 && pt.branch != 2) {
    throw Error("surface point branch must be 1 or 2");
  }
  const CurvePair pair = curve_pair(ParameterPoint{pt.b, pt.c});
  const Rat& q = pt.branch == 1 ? pair.q1 : pair.q2;
  const Rat& p = pt.branch == 1 ? pair.p1 : pair.p2;
  const Rat& d = pt.branch == 1 ? pair.d1 : pair.d2;
  if (p == 0) {
    throw SingularInput("alpha-lift undefined: P vanishes at (b,c)", {"P"});
  }
  if (pt.w == 1 || pt.w == -1) {
    throw ExceptionalPoint("w = +-1 is an exceptional base point of the cubic");
  }
  if (!on_sextic(d, pt.w)) {
    throw Error("surface point does not satisfy its sextic");
  }
  return LiftedPoint{pt, lift_alpha(q, p, pt.w)};
}

Rat sextic_d_from_w(const Rat& w) {
  const Rat w2 = w * w;
  const Rat s = w2 + 3;
  return -4 * (w2 - 1) * (w2 - 1) / (s * s * s);
}

std::vector<Rat> sextic_rational_roots(const Rat& d) {
  if (d == 0) {
    // 4 (w-1)^2 (1+w)^2 = 0
    return {Rat(-1), Rat(-1), Rat(1), Rat(1)};
  }
  // Rational w solve the sextic exactly when y = (1-w^2)/(w^2+3) is a
  // rational root of the reduced cubic y^3 + y^2 + D = 0 (then
  // w^2 = (1-3y)/(1+y)). Going through the cubic keeps the cleared
  // coefficients product-structured (numerator and denominator of D), so
  // root extraction stays cheap even for huge curve data.
  std::vector<Rat> cubic_roots = rational_roots({d, Rat(0), Rat(1), Rat(1)});
  std::sort(cubic_roots.begin(), cubic_roots.end());
  cubic_roots.erase(std::unique(cubic_roots.begin(), cubic_roots.end()),
                    cubic_roots.end());
  std::vector<Rat> candidates;
  for (const Rat& y : cubic_roots) {
    if (y == -1) continue;  // only possible when d = 0
    const auto w = rat_sqrt((1 - 3 * y) / (1 + y));
    if (!w) continue;
    candidates.push_back(*w);
    if (*w != 0) candidates.push_back(-*w);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // multiplicities by repeated synthetic division of the sextic
  // D w^6 + (9D+4) w^4 + (27D-8) w^2 + (27D+4)
  std::vector<Rat> roots;
  std::vector<Rat> coeffs{27 * d + 4, Rat(0), 27 * d - 8, Rat(0),
                          9 * d + 4,  Rat(0), d};
  for (const Rat& w : candidates) {
    for (;;) {
      std::vector<Rat> quotient(coeffs.size() - 1);
      Rat carry(0);
      for (std::size_t i = coeffs.size(); i-- > 1;) {
        carry = coeffs[i] + carry * w;
        quotient[i - 1] = carry;
      }
      const Rat remainder = coeffs[0] + carry * w;
      if (remainder != 0) break;
      roots.push_back(w);
      coeffs = std::move(quotient);
      if (coeffs.size() < 2) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  for (const Rat& w : roots) {
    if (!on_sextic(d, w)) {
      throw VerificationError("sextic root failed its defining equation");
    }
  }
  return roots;
}

ReducedCubicRoots reduced_cubic_roots(const Rat& w) {
  const Rat s = w * w + 3;  // > 0 for every rational w
  return ReducedCubicRoots{-2 * (w + 1) / s, 2 * (w - 1) / s, (1 - w * w) / s};
}

MordellForm::MordellForm(const Rat& p) : half_p_(p / 2), k_(half_p_ * half_p_) {}

MordellPoint MordellForm::forward(const Rat& w, const Rat& alpha) const {
  return MordellPoint{half_p_ * alpha, half_p_ * w};
}

MordellForm::CubicPoint MordellForm::inverse(const MordellPoint& pt) const {
  return CubicPoint{pt.y / half_p_, pt.x / half_p_};
}

MordellForm mordell_form(const CubicCurveSpec& spec) {
  if (spec.p == 0) {
    throw DegenerateCurve("P = 0: the cubic degenerates, no Mordell model");
  }
  return MordellForm(spec.p);
}

}  // namespace cuboidcurves
