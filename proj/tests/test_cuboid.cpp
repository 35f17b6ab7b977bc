#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cuboidcurves/cuboid.hpp"
#include "cuboidcurves/errors.hpp"
#include "oracles.hpp"

using namespace cuboidcurves;

namespace {

CuboidWitness witness(std::initializer_list<long> values) {
  std::vector<Rat> v;
  for (long x : values) v.push_back(Rat(x));
  return CuboidWitness{v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
}

/// One-zero-edge solution from a rational point on the unit circle.
CuboidWitness degenerate_box(const Rat& t) {
  const Rat x1 = (1 - t * t) / (1 + t * t);
  const Rat x2 = 2 * t / (1 + t * t);
  return CuboidWitness{x1, x2, Rat(0), x2, x1, Rat(1), Rat(1)};
}

}  // namespace

TEST_CASE("cuboid polynomials") {
  auto p = eval_cuboid_polynomials(witness({1, 0, 0, 0, 1, 1, 1}));
  CHECK(p.p0 == 0);
  CHECK(p.p1 == 0);
  CHECK(p.p2 == 0);
  CHECK(p.p3 == 0);

  p = eval_cuboid_polynomials(witness({1, 1, 1, 1, 1, 1, 1}));
  CHECK(p.p0 == 2);
  CHECK(p.p1 == 1);
  CHECK(p.p2 == 1);
  CHECK(p.p3 == 1);

  p = eval_cuboid_polynomials(witness({0, 0, 0, 0, 0, 0, 0}));
  CHECK(p.p0 == 0);
  CHECK(p.p3 == 0);
}

TEST_CASE("factor equations") {
  CHECK(check_factor_equations(witness({1, 0, 0, 0, 1, 1, 1})));
  CHECK(check_factor_equations(witness({0, 0, 0, 0, 0, 0, 0})));
  CHECK(!check_factor_equations(witness({1, 1, 1, 1, 1, 1, 1})));
}

TEST_CASE("positivity gate") {
  CHECK(theorem_1_1_gate(witness({1, 0, 0, 0, 1, 1, 1})) ==
        WitnessClass::factor_only);
  CHECK(theorem_1_1_gate(witness({1, 1, 1, 1, 1, 1, 1})) ==
        WitnessClass::non_solution);
  // The full-solution branch demands a positive solution of the factor
  // equations, i.e. a rational perfect cuboid for L = 1; no such witness
  // is known to exist, so the branch is exercised only by the theorem's
  // own re-check. Degenerate data always breaks positivity:
  for (int i = 1; i <= 10; ++i) {
    const CuboidWitness w = degenerate_box(make_rat(Int(i), Int(i + 1)));
    CHECK(theorem_1_1_gate(w) == WitnessClass::factor_only);
  }
}

TEST_CASE("elementary values of explicit roots") {
  auto e = elementary_from_roots({Rat(1), Rat(2), Rat(3)},
                                 {Rat(0), Rat(0), Rat(0)});
  CHECK(e.e10 == 6);
  CHECK(e.e20 == 11);
  CHECK(e.e30 == 6);
  CHECK(e.e01 == 0);
  CHECK(e.e02 == 0);
  CHECK(e.e03 == 0);
  CHECK(e.e21 == 0);
  CHECK(e.e11 == 0);
  CHECK(e.e12 == 0);

  e = elementary_from_roots({Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(1)});
  CHECK(e.e10 == 3);
  CHECK(e.e20 == 3);
  CHECK(e.e30 == 1);
  CHECK(e.e01 == 3);
  CHECK(e.e02 == 3);
  CHECK(e.e03 == 1);
  CHECK(e.e21 == 3);
  CHECK(e.e11 == 6);
  CHECK(e.e12 == 3);

  e = elementary_from_roots({Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)});
  CHECK(e.e10 == 0);
  CHECK(e.e12 == 0);
}

TEST_CASE("simultaneous permutation invariance") {
  std::mt19937 rng(601);
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int trial = 0; trial < 30; ++trial) {
    std::array<Rat, 3> x, d;
    for (int i = 0; i < 3; ++i) {
      x[static_cast<std::size_t>(i)] = oracle::random_rat(rng, 20, 10);
      d[static_cast<std::size_t>(i)] = oracle::random_rat(rng, 20, 10);
    }
    const auto base = elementary_from_roots(x, d);
    for (const auto& perm : perms) {
      std::array<Rat, 3> xs, ds;
      for (int i = 0; i < 3; ++i) {
        xs[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(perm[i])];
        ds[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(perm[i])];
      }
      CHECK(check_symmetric_consistency(xs, ds, base));
    }
  }
}

TEST_CASE("cubic solving") {
  CHECK(solve_cubic_rational(Rat(6), Rat(11), Rat(6)) ==
        std::vector<Rat>{1, 2, 3});
  CHECK(solve_cubic_rational(Rat(0), Rat(0), Rat(0)) ==
        std::vector<Rat>{0, 0, 0});
  CHECK(solve_cubic_rational(Rat(0), Rat(1), Rat(0)) == std::vector<Rat>{0});
}

TEST_CASE("Vieta round trip") {
  std::mt19937 rng(602);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<Rat, 3> x;
    for (auto& v : x) v = oracle::random_rat(rng, 30, 12);
    std::sort(x.begin(), x.end());
    const Rat e1 = x[0] + x[1] + x[2];
    const Rat e2 = x[0] * x[1] + x[1] * x[2] + x[2] * x[0];
    const Rat e3 = x[0] * x[1] * x[2];
    const auto roots = solve_cubic_rational(e1, e2, e3);
    CHECK(roots == std::vector<Rat>(x.begin(), x.end()));
  }
}

TEST_CASE("symmetric consistency") {
  const std::array<Rat, 3> x{Rat(1), Rat(2), Rat(3)};
  const std::array<Rat, 3> d{Rat(4), Rat(5), Rat(6)};
  const auto profile = elementary_from_roots(x, d);
  CHECK(check_symmetric_consistency(x, d, profile));
  CHECK(check_symmetric_consistency({Rat(2), Rat(3), Rat(1)},
                                    {Rat(5), Rat(6), Rat(4)}, profile));
  // swapping d alone breaks the mixed values
  CHECK(!check_symmetric_consistency(x, {Rat(5), Rat(4), Rat(6)}, profile));
  const auto ones =
      elementary_from_roots({Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(1)});
  CHECK(!check_symmetric_consistency({Rat(1), Rat(2), Rat(3)},
                                     {Rat(0), Rat(0), Rat(0)}, ones));
}

TEST_CASE("degenerate boxes solve everything except positivity") {
  std::mt19937 rng(603);
  for (int i = 1; i <= 20; ++i) {
    const CuboidWitness w = degenerate_box(make_rat(Int(i), Int(21)));
    const auto p = eval_cuboid_polynomials(w);
    CHECK(p.p0 == 0);
    CHECK(p.p1 == 0);
    CHECK(p.p2 == 0);
    CHECK(p.p3 == 0);
    CHECK(check_factor_equations(w));
    CHECK(theorem_1_1_gate(w) == WitnessClass::factor_only);

    // random single-field perturbations break the factor equations
    for (int k = 0; k < 20; ++k) {
      CuboidWitness broken = w;
      Rat* fields[] = {&broken.x1, &broken.x2, &broken.x3, &broken.d1,
                       &broken.d2, &broken.d3, &broken.big_l};
      Rat* field = fields[rng() % 7];
      const Rat original = *field;
      Rat delta;
      do {
        delta = oracle::random_rat(rng, 9, 5, false);
      } while (delta == 0 || delta == -2 * original);  // keep |field| changed
      *field = original + delta;
      CHECK(!check_factor_equations(broken));
    }
  }
}
