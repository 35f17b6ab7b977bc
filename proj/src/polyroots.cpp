#include "cuboidcurves/polyroots.hpp"

#include <algorithm>
#include <optional>

#include "cuboidcurves/errors.hpp"
#include "cuboidcurves/intfactor.hpp"

namespace cuboidcurves {

Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

namespace {

void strip_leading_zeros(std::vector<Rat>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

/// Clears denominators and divides by the content.
std::vector<Int> primitive_integer_form(const std::vector<Rat>& coeffs) {
  Int common_den(1);
  for (const Rat& c : coeffs) common_den = lcm(common_den, denominator(c));
  std::vector<Int> out;
  out.reserve(coeffs.size());
  Int content(0);
  for (const Rat& c : coeffs) {
    Int v = numerator(c) * (common_den / denominator(c));
    content = gcd(content, v);
    out.push_back(v);
  }
  if (content > 1) {
    for (Int& v : out) v /= content;
  }
  return out;
}

Rat eval_int_poly(const std::vector<Int>& coeffs, const Rat& x) {
  Rat acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += Rat(*it);
  }
  return acc;
}

// ---- route 1: divisor enumeration (small, factorization-friendly) ----

std::optional<Rat> rrt_smallest_root(const std::vector<Int>& poly) {
  std::vector<Rat> candidates;
  for (const Int& p : divisors(poly.front())) {
    for (const Int& q : divisors(poly.back())) {
      if (gcd(p, q) != 1) continue;
      candidates.push_back(make_rat(p, q));
      candidates.push_back(make_rat(-p, q));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const Rat& r : candidates) {
    if (eval_int_poly(poly, r) == 0) return r;
  }
  return std::nullopt;
}

unsigned long long divisor_pair_count(const Int& a, const Int& b) {
  unsigned long long count = 1;
  for (const Int& n : {a, b}) {
    for (const auto& f : factorize(n).factors) {
      count *= static_cast<unsigned long long>(f.exponent) + 1;
      if (count > (1ull << 40)) return count;
    }
  }
  return count;
}

// ---- route 2: Sturm isolation + bounded-denominator reconstruction ----
//
// A rational root p/q of the primitive polynomial has q | leading, so
// q <= |leading|. Distinct real roots are isolated with a Sturm chain;
// once an isolating interval is narrower than 1/(2 leading^2) it contains
// at most one rational with such a denominator, and the smallest-
// denominator rational in the interval is the only candidate. This route
// never factors coefficients, so huge or divisor-rich values stay cheap.

using Poly = std::vector<Rat>;  // ascending coefficients, nonzero leading

Poly derivative(const Poly& f) {
  Poly out;
  for (std::size_t i = 1; i < f.size(); ++i) {
    out.push_back(f[i] * Rat(static_cast<long>(i)));
  }
  return out;
}

Poly poly_remainder(Poly f, const Poly& g) {
  while (f.size() >= g.size()) {
    const Rat factor = f.back() / g.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] -= factor * g[i];
    }
    f.pop_back();
    strip_leading_zeros(f);
    if (f.empty()) break;
  }
  if (!f.empty()) {
    const std::vector<Int> prim = primitive_integer_form(f);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = Rat(prim[i]);
  }
  return f;
}

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain{f, derivative(f)};
  while (chain.back().size() > 1) {
    Poly rem = poly_remainder(chain[chain.size() - 2], chain.back());
    if (rem.empty()) break;
    for (Rat& c : rem) c = -c;
    chain.push_back(std::move(rem));
  }
  return chain;
}

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

/// Sign variations of the chain at x; x must not be a root of chain[0].
/// V(a) - V(b) counts distinct real roots in (a, b).
unsigned sturm_variations(const std::vector<Poly>& chain, const Rat& x) {
  unsigned variations = 0;
  int last = 0;
  for (const Poly& p : chain) {
    const int s = sign_of(eval_poly(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Smallest-denominator rational in [lo, hi] (continued-fraction descent).
Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  if (lo == hi) return lo;
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo < hi
  Int floor_lo;
  mpz_fdiv_q(floor_lo.get_mpz_t(), numerator(lo).get_mpz_t(),
             denominator(lo).get_mpz_t());
  const Int ceil_lo = floor_lo + (lo == Rat(floor_lo) ? 0 : 1);
  if (Rat(ceil_lo) <= hi) return Rat(ceil_lo);
  const Rat frac_lo = lo - Rat(floor_lo);  // in (0, 1)
  const Rat frac_hi = hi - Rat(floor_lo);
  return Rat(floor_lo) + 1 / simplest_rational_in(1 / frac_hi, 1 / frac_lo);
}

std::vector<Rat> isolation_rational_roots(const std::vector<Int>& prim) {
  Poly f(prim.size());
  for (std::size_t i = 0; i < prim.size(); ++i) f[i] = Rat(prim[i]);
  const std::vector<Poly> chain = sturm_chain(f);

  Rat bound(1);
  for (std::size_t i = 0; i + 1 < prim.size(); ++i) {
    const Rat v = abs(Rat(prim[i]) / Rat(prim.back()));
    if (v > bound) bound = v;
  }
  bound += 1;  // strict Cauchy bound: every real root lies in (-bound, bound)

  const Int leading = abs(prim.back());
  Rat target_width = Rat(1) / Rat(2 * leading * leading);
  if (target_width > Rat(1, 16)) target_width = Rat(1, 16);

  std::vector<Rat> found;
  // split point with f != 0; exact hits are rational roots, recorded
  auto pick_split = [&](const Rat& lo, const Rat& hi) {
    const Rat span = hi - lo;
    for (int k = 2;; ++k) {
      const Rat t = lo + span / k;
      if (eval_poly(f, t) != 0) return t;
      found.push_back(t);
    }
  };

  struct Bracket {
    Rat lo, hi;
  };
  std::vector<Bracket> stack{{-bound, bound}};
  while (!stack.empty()) {
    const Bracket iv = stack.back();
    stack.pop_back();
    const unsigned roots =
        sturm_variations(chain, iv.lo) - sturm_variations(chain, iv.hi);
    if (roots == 0) continue;
    if (roots == 1 && iv.hi - iv.lo < target_width) {
      const Rat candidate = simplest_rational_in(iv.lo, iv.hi);
      if (eval_poly(f, candidate) == 0) found.push_back(candidate);
      continue;
    }
    const Rat t = pick_split(iv.lo, iv.hi);
    stack.push_back({iv.lo, t});
    stack.push_back({t, iv.hi});
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

/// Smallest rational root of the primitive polynomial, or nullopt.
std::optional<Rat> find_one_root(const std::vector<Int>& poly) {
  if (poly.size() == 2) {
    return make_rat(-poly[0], poly[1]);
  }
  // beyond 64-bit-ish coefficients, skip factorization entirely
  const bool oversized = mpz_sizeinbase(poly.front().get_mpz_t(), 2) > 62 ||
                         mpz_sizeinbase(poly.back().get_mpz_t(), 2) > 62;
  constexpr unsigned long long kDivisorBudget = 50000;
  if (!oversized &&
      divisor_pair_count(poly.front(), poly.back()) <= kDivisorBudget) {
    return rrt_smallest_root(poly);
  }
  const std::vector<Rat> roots = isolation_rational_roots(poly);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

}  // namespace

std::vector<Rat> rational_roots(const std::vector<Rat>& coefficients) {
  std::vector<Rat> coeffs = coefficients;
  strip_leading_zeros(coeffs);
  if (coeffs.empty()) throw Error("rational_roots: zero polynomial");

  std::vector<Rat> roots;
  // factor out x^v
  std::size_t valuation = 0;
  while (valuation < coeffs.size() && coeffs[valuation] == 0) ++valuation;
  roots.assign(valuation, Rat(0));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(valuation));

  while (coeffs.size() >= 2) {
    const auto root = find_one_root(primitive_integer_form(coeffs));
    if (!root) break;
    roots.push_back(*root);
    // synthetic division by (x - root)
    std::vector<Rat> quotient(coeffs.size() - 1);
    Rat carry(0);
    for (std::size_t i = coeffs.size(); i-- > 1;) {
      carry = coeffs[i] + carry * *root;
      quotient[i - 1] = carry;
    }
    coeffs = std::move(quotient);
    while (!coeffs.empty() && coeffs.front() == 0) {
      roots.push_back(Rat(0));
      coeffs.erase(coeffs.begin());
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cuboidcurves
