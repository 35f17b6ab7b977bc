/**
 * @file conic.hpp
 * @brief The genus-zero curves w^2 + 3 = Q alpha^2: normalization to
 *        Legendre form, solvability criteria, bounded point search, and the
 *        chord parametrization through a base point.
 */
#pragma once

#include <cstdint>
#include <optional>

#include "cuboidcurves/rational.hpp"

namespace cuboidcurves {

struct ConicSpec {
  Rat q;  // nonzero
};

/// Q = (M m^2) / (N n^2) with M, N coprime square-free integers and m, n
/// coprime positive integers. normalize_conic always produces the
/// canonical split N = 1; the solvability criteria depend only on M*N.
struct LegendreForm {
  Int M;
  Int N;
  Int m;
  Int n;

  Int product() const { return M * N; }
};

/// Nonzero integer solution of X^2 - MN Y^2 + 3 Z^2 = 0.
struct LegendreSolution {
  Int x, y, z;
};

struct ConicPoint {
  Rat w;
  Rat alpha;
};

bool conic_contains(const ConicSpec& spec, const ConicPoint& pt);

/// Throws on Q = 0.
LegendreForm normalize_conic(const ConicSpec& spec);

/// Solvability of X^2 - MN Y^2 + 3 Z^2 = 0 by the congruence criteria
/// (split on whether 3 divides MN). Throws on zero or non-square-free
/// input.
bool legendre_solvable(const Int& mn);

/// Independent decision route: exhaustive search over the bounded box
/// X^2 <= 3 MN, |Y| <= 2, Z^2 <= MN (all components positive; sign flips
/// cover the rest). The box provably contains a solution whenever one
/// exists, so nullopt certifies unsolvability. Returns the minimal
/// solution by (max component, then lexicographic) order.
std::optional<LegendreSolution> solve_legendre(const Int& mn);

struct PointSearchResult {
  std::optional<ConicPoint> point;
  bool capped = false;  // search budget exhausted before a conclusion
};

/// Rational point of w^2 + 3 = Q alpha^2 via the Legendre solution pulled
/// back through w0 = X/Z, alpha0 = Y N n / (Z m); nullopt when the conic
/// has no rational point. `sweep_limit` caps the number of search
/// iterations (grid scans stay bounded; the cap is deterministic).
PointSearchResult find_conic_point(const ConicSpec& spec,
                                   std::uint64_t sweep_limit);
std::optional<ConicPoint> find_conic_point(const ConicSpec& spec);

/// Chord parametrization (base point + parameter t). Throws
/// DegenerateParameter when 1 - Q t^2 = 0.
ConicPoint parametrize_conic(const ConicSpec& spec, const ConicPoint& base,
                             const Rat& t);

/// Inverse of parametrize_conic: t = (alpha - alpha0) / (w + w0). Throws
/// DegenerateParameter when w + w0 = 0.
Rat parameter_from_point(const ConicPoint& base, const ConicPoint& pt);

}  // namespace cuboidcurves
