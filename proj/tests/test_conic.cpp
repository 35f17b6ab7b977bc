#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cuboidcurves/conic.hpp"
#include "cuboidcurves/errors.hpp"
#include "cuboidcurves/intfactor.hpp"
#include "oracles.hpp"

using namespace cuboidcurves;

TEST_CASE("normalize_conic") {
  auto form = normalize_conic({Rat(4)});
  CHECK(form.M == 1);
  CHECK(form.N == 1);
  CHECK(form.m == 2);
  CHECK(form.n == 1);

  form = normalize_conic({rat_from_string("33/2")});
  CHECK(form.M == 66);
  CHECK(form.N == 1);
  CHECK(form.m == 1);
  CHECK(form.n == 2);
  CHECK(form.product() == 66);

  form = normalize_conic({rat_from_string("-75/8")});
  CHECK(form.M == -6);
  CHECK(form.N == 1);
  CHECK(form.m == 5);
  CHECK(form.n == 4);

  CHECK_THROWS_AS((void)normalize_conic({Rat(0)}), Error);
}

TEST_CASE("normalize_conic invariants at random rationals") {
  std::mt19937 rng(1301);
  for (int i = 0; i < 100; ++i) {
    const Rat q = oracle::random_rat(rng, 5000, 5000, false);
    const auto form = normalize_conic({q});
    CHECK(is_squarefree(form.M));
    CHECK(form.N == 1);
    CHECK(form.m > 0);
    CHECK(form.n > 0);
    CHECK(gcd(form.m, form.n) == 1);
    CHECK(Rat(form.M * form.m * form.m) / Rat(form.N * form.n * form.n) == q);
  }
}

TEST_CASE("legendre_solvable worked cases") {
  CHECK(legendre_solvable(Int(1)));
  CHECK(!legendre_solvable(Int(2)));
  CHECK(legendre_solvable(Int(3)));
  CHECK(!legendre_solvable(Int(-1)));
  CHECK(!legendre_solvable(Int(66)));
  CHECK_THROWS_AS((void)legendre_solvable(Int(4)), Error);
  CHECK_THROWS_AS((void)legendre_solvable(Int(0)), Error);
}

TEST_CASE("solve_legendre worked cases") {
  auto sol = solve_legendre(Int(1));
  REQUIRE(sol);
  CHECK(sol->x == 1);
  CHECK(sol->y == 2);
  CHECK(sol->z == 1);

  sol = solve_legendre(Int(3));
  REQUIRE(sol);
  CHECK(sol->x == 3);
  CHECK(sol->y == 2);
  CHECK(sol->z == 1);

  CHECK(!solve_legendre(Int(66)));
  CHECK(!solve_legendre(Int(-5)));
}

TEST_CASE("criterion and bounded search agree for |MN| <= 300") {
  for (long mn = -300; mn <= 300; ++mn) {
    if (mn == 0 || !is_squarefree(Int(mn))) continue;
    const bool by_criterion = legendre_solvable(Int(mn));
    const bool by_search = oracle::legendre_search_exhaustive(Int(mn));
    const auto sol = solve_legendre(Int(mn));
    CAPTURE(mn);
    CHECK(by_criterion == by_search);
    CHECK(by_criterion == bool(sol));
    if (sol) {
      CHECK(sol->x * sol->x - Int(mn) * sol->y * sol->y + 3 * sol->z * sol->z ==
            0);
    }
  }
}

TEST_CASE("solvability depends only on the product M*N") {
  // 66 = 66*1 = 33*2 = 22*3 = 11*6
  const LegendreForm splits[] = {{Int(66), Int(1), Int(1), Int(1)},
                                 {Int(33), Int(2), Int(1), Int(1)},
                                 {Int(22), Int(3), Int(1), Int(1)},
                                 {Int(11), Int(6), Int(1), Int(1)}};
  for (const auto& split : splits) {
    CHECK(split.product() == 66);
    CHECK(!legendre_solvable(split.product()));
  }
  const LegendreForm splits21[] = {{Int(21), Int(1), Int(1), Int(1)},
                                   {Int(7), Int(3), Int(1), Int(1)},
                                   {Int(3), Int(7), Int(1), Int(1)}};
  for (const auto& split : splits21) {
    CHECK(legendre_solvable(split.product()));
  }
}

TEST_CASE("find_conic_point worked cases") {
  auto point = find_conic_point({Rat(4)});
  REQUIRE(point);
  CHECK(point->w == 1);
  CHECK(point->alpha == 1);

  point = find_conic_point({Rat(1)});
  REQUIRE(point);
  CHECK(point->w == 1);
  CHECK(point->alpha == 2);

  CHECK(!find_conic_point({rat_from_string("33/2")}));
  CHECK(!find_conic_point({Rat(-3)}));
}

TEST_CASE("unsolvable conics really have no small points") {
  for (const char* q_text : {"33/2", "2", "-7/3"}) {
    const Rat q = rat_from_string(q_text);
    REQUIRE(!find_conic_point({q}));
    CHECK(!oracle::conic_has_point_brute(q, 50));
  }
}

TEST_CASE("parametrize_conic worked cases") {
  const ConicSpec four{Rat(4)};
  const ConicPoint base{Rat(1), Rat(1)};
  auto pt = parametrize_conic(four, base, Rat(1));
  CHECK(pt.w == rat_from_string("-13/3"));
  CHECK(pt.alpha == rat_from_string("-7/3"));

  pt = parametrize_conic(four, base, Rat(0));
  CHECK(pt.w == 1);
  CHECK(pt.alpha == 1);

  const ConicSpec one{Rat(1)};
  pt = parametrize_conic(one, ConicPoint{Rat(1), Rat(2)}, rat_from_string("1/2"));
  CHECK(pt.w == rat_from_string("13/3"));
  CHECK(pt.alpha == rat_from_string("14/3"));

  CHECK_THROWS_AS(
      (void)parametrize_conic(four, base, rat_from_string("1/2")),
      DegenerateParameter);  // 1 - 4/4 = 0
  CHECK_THROWS_AS((void)parametrize_conic(four, ConicPoint{Rat(0), Rat(0)}, Rat(1)),
                  Error);  // base not on conic
}

TEST_CASE("parameter_from_point worked cases") {
  const ConicPoint base{Rat(1), Rat(1)};
  CHECK(parameter_from_point(
            base, ConicPoint{rat_from_string("-13/3"), rat_from_string("-7/3")}) ==
        1);
  CHECK(parameter_from_point(base, base) == 0);
  CHECK_THROWS_AS((void)parameter_from_point(base, ConicPoint{Rat(-1), Rat(1)}),
                  DegenerateParameter);
}

TEST_CASE("round trip through the chord parametrization") {
  std::mt19937 rng(1302);
  // ten solvable Q values: spec-pinned 1 and 4 plus solvable normalizations
  std::vector<Rat> qs{Rat(1), Rat(4)};
  while (qs.size() < 10) {
    const Rat q = oracle::random_rat(rng, 60, 60, false);
    const Int mn = normalize_conic({q}).product();
    if (mn > 0 && legendre_solvable(mn)) qs.push_back(q);
  }
  for (const Rat& q : qs) {
    const ConicSpec spec{q};
    const auto base = find_conic_point(spec);
    REQUIRE(base);
    for (int i = 0; i < 100; ++i) {
      const Rat t = oracle::random_rat(rng, 50, 50);
      if (1 - q * t * t == 0) continue;
      const ConicPoint pt = parametrize_conic(spec, *base, t);
      CHECK(conic_contains(spec, pt));
      if (pt.w + base->w == 0) continue;
      CHECK(parameter_from_point(*base, pt) == t);
    }
  }
}

TEST_CASE("point search budget caps deterministically") {
  // Q = 7 is solvable with the small representative (2,1,1); a budget of
  // zero sweeps nothing and must report capped without an answer.
  const PointSearchResult capped = find_conic_point({Rat(7)}, 0);
  CHECK(!capped.point);
  CHECK(capped.capped);
  const PointSearchResult full = find_conic_point({Rat(7)}, 1000);
  REQUIRE(full.point);
  CHECK(!full.capped);
  CHECK(conic_contains({Rat(7)}, *full.point));
}
