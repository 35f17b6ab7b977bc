#include "cuboidcurves/conic.hpp"

#include <limits>

#include "cuboidcurves/errors.hpp"
#include "cuboidcurves/intfactor.hpp"

namespace cuboidcurves {

bool conic_contains(const ConicSpec& spec, const ConicPoint& pt) {
  return pt.w * pt.w + 3 == spec.q * pt.alpha * pt.alpha;
}

LegendreForm normalize_conic(const ConicSpec& spec) {
  if (spec.q == 0) throw Error("normalize_conic: Q must be nonzero");
  const SquareFreeSplit split = square_free_split(spec.q);
  return LegendreForm{split.squarefree, Int(1), numerator(split.cofactor),
                      denominator(split.cofactor)};
}

bool legendre_solvable(const Int& mn) {
  if (mn == 0) throw Error("legendre_solvable: MN must be nonzero");
  if (!is_squarefree(mn)) {
    throw Error("legendre_solvable: MN must be square-free");
  }
  if (mn < 0) return false;
  if (!is_square_mod(Int(-3), mn)) return false;
  if (mn % 3 == 0) {
    return is_square_mod(mn / 3, Int(3));
  }
  return is_square_mod(mn, Int(3));
}

namespace {

struct Candidate {
  Int x, y, z;

  Int max_component() const {
    Int m = x;
    if (y > m) m = y;
    if (z > m) m = z;
    return m;
  }

  bool better_than(const Candidate& other) const {
    const Int a = max_component();
    const Int b = other.max_component();
    if (a != b) return a < b;
    if (x != other.x) return x < other.x;
    if (y != other.y) return y < other.y;
    return z < other.z;
  }
};

/// Sweeps Y in {1,2}, Z in [1, floor(sqrt(MN))], solving for X exactly.
/// Returns all-positive candidates; nullopt in `found` means none exist in
/// the box. `budget` counts Z iterations; exhausting it sets `capped`.
struct SweepResult {
  std::optional<Candidate> found;
  bool capped = false;
};

SweepResult sweep_box(const Int& mn, std::uint64_t budget) {
  SweepResult result;
  const Int zmax = isqrt(mn);
  const Int xmax_square = 3 * mn;
  std::uint64_t used = 0;
  std::optional<Candidate> best;
  for (int y = 1; y <= 2; ++y) {
    const Int target_base = mn * y * y;
    for (Int z = 1; z <= zmax; ++z) {
      if (++used > budget) {
        result.capped = true;
        result.found = best;
        return result;
      }
      const Int x_square = target_base - 3 * z * z;
      if (x_square < 1) break;  // larger z only decreases x^2
      if (x_square > xmax_square) continue;
      if (!is_perfect_square(x_square)) continue;
      Candidate cand{isqrt(x_square), Int(y), z};
      if (!best || cand.better_than(*best)) best = cand;
    }
  }
  result.found = best;
  return result;
}

}  // namespace

std::optional<LegendreSolution> solve_legendre(const Int& mn) {
  if (mn == 0) throw Error("solve_legendre: MN must be nonzero");
  if (!is_squarefree(mn)) {
    throw Error("solve_legendre: MN must be square-free");
  }
  if (mn < 0) return std::nullopt;  // sum of three nonnegative terms
  const SweepResult sweep =
      sweep_box(mn, std::numeric_limits<std::uint64_t>::max());
  if (!sweep.found) return std::nullopt;
  return LegendreSolution{sweep.found->x, sweep.found->y, sweep.found->z};
}

PointSearchResult find_conic_point(const ConicSpec& spec,
                                   std::uint64_t sweep_limit) {
  if (spec.q == 0) throw Error("find_conic_point: Q must be nonzero");
  PointSearchResult result;
  const LegendreForm form = normalize_conic(spec);
  const Int mn = form.product();
  if (mn < 0) return result;
  if (!legendre_solvable(mn)) return result;
  const SweepResult sweep = sweep_box(mn, sweep_limit);
  if (!sweep.found) {
    if (sweep.capped) {
      // budget ran out before any representative turned up: inconclusive
      result.capped = true;
      return result;
    }
    // criterion says solvable, bounded search is complete: impossible
    throw VerificationError(
        "legendre_solvable and the bounded search disagree at MN = " +
        int_to_string(mn));
  }
  // (3.8): w0 = X/Z, alpha0 m / (N n) = Y/Z   (Z >= 1 by construction)
  const Candidate& s = *sweep.found;
  ConicPoint point{make_rat(s.x, s.z), make_rat(s.y * form.N * form.n, s.z * form.m)};
  if (!conic_contains(spec, point)) {
    throw VerificationError("conic point failed its defining equation");
  }
  result.point = point;
  return result;
}

std::optional<ConicPoint> find_conic_point(const ConicSpec& spec) {
  return find_conic_point(spec, std::numeric_limits<std::uint64_t>::max()).point;
}

ConicPoint parametrize_conic(const ConicSpec& spec, const ConicPoint& base,
                             const Rat& t) {
  if (!conic_contains(spec, base)) {
    throw Error("parametrize_conic: base point is not on the conic");
  }
  const Rat denom = 1 - spec.q * t * t;
  if (denom == 0) {
    throw DegenerateParameter("1 - Q t^2 vanishes at t = " + rat_to_string(t));
  }
  ConicPoint out;
  out.w = (base.w + 2 * spec.q * base.alpha * t + spec.q * base.w * t * t) / denom;
  out.alpha = (base.alpha + 2 * base.w * t + spec.q * base.alpha * t * t) / denom;
  if (!conic_contains(spec, out)) {
    throw VerificationError("parametrized point failed the conic equation");
  }
  return out;
}

Rat parameter_from_point(const ConicPoint& base, const ConicPoint& pt) {
  const Rat denom = pt.w + base.w;
  if (denom == 0) {
    throw DegenerateParameter("w + w0 vanishes; parameter undefined");
  }
  return (pt.alpha - base.alpha) / denom;
}

}  // namespace cuboidcurves
