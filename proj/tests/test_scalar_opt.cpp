#include <doctest.h>

#include <cmath>
#include <limits>

#include "g2u/scalar_opt.hpp"
#include "test_support.hpp"

using namespace g2u;

TEST_SUITE("scalar_opt") {

TEST_CASE("minimize_1d on smooth objectives") {
  const auto quad = [](double x) { return (x - 2.0) * (x - 2.0); };
  const auto r1 = minimize_1d(quad, SearchSpec{0.0, 10.0, 64, 1e-12, 1e-14});
  CHECK(std::fabs(r1.x - 2.0) < 1e-6);
  CHECK(r1.f < 1e-12);

  const auto amgm = [](double x) { return x + 1.0 / x; };
  const auto r2 = minimize_1d(amgm, SearchSpec{0.1, 10.0, 64, 1e-12, 0.0});
  CHECK(std::fabs(r2.x - 1.0) < 1e-6);
  CHECK(std::fabs(r2.f - 2.0) < 1e-10);
}

TEST_CASE("minimize_1d never beats the grid but never loses to it") {
  // objective with a narrow dip between grid nodes
  const auto f = [](double x) { return std::cos(x) + 0.1 * x; };
  const SearchSpec spec{0.0, 20.0, 64, 1e-12, 0.0};
  const auto res = minimize_1d(f, spec);
  double grid_best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < spec.n_grid; ++i) {
    const double x = spec.lo + (spec.hi - spec.lo) * i / (spec.n_grid - 1);
    grid_best = std::min(grid_best, f(x));
  }
  CHECK(res.f <= grid_best);
}

TEST_CASE("minimize_1d treats +inf as infeasible") {
  const double inf = std::numeric_limits<double>::infinity();
  const auto partial = [&](double x) { return x < 3.0 ? inf : (x - 5.0) * (x - 5.0); };
  const auto res = minimize_1d(partial, SearchSpec{0.0, 10.0, 64, 1e-12, 1e-14});
  CHECK(std::fabs(res.x - 5.0) < 1e-6);

  const auto nowhere = [&](double) { return inf; };
  CHECK_THROWS_AS(minimize_1d(nowhere, SearchSpec{0.0, 1.0, 64, 1e-12, 0.0}),
                  InfeasibleError);
}

TEST_CASE("minimize_1d is deterministic") {
  const auto f = [](double x) { return std::sin(3 * x) + 0.01 * x * x; };
  const auto a = minimize_1d(f, SearchSpec{-10.0, 10.0, 128, 1e-12, 0.0});
  const auto b = minimize_1d(f, SearchSpec{-10.0, 10.0, 128, 1e-12, 0.0});
  CHECK(a.x == b.x);
  CHECK(a.f == b.f);
}

TEST_CASE("bisect_monotone") {
  const auto id = [](double x) { return x; };
  CHECK(std::fabs(bisect_monotone(id, 0.3, SearchSpec{0.0, 1.0, 8, 1e-12, 0.0}) - 0.3) < 1e-9);

  const auto cube = [](double x) { return x * x * x; };
  CHECK(std::fabs(bisect_monotone(cube, 8.0, SearchSpec{0.0, 10.0, 8, 1e-12, 0.0}) - 2.0) < 1e-9);

  CHECK_THROWS_AS(bisect_monotone(id, 5.0, SearchSpec{0.0, 1.0, 8, 1e-12, 0.0}),
                  NumericError);
}

TEST_CASE("search spec invariants are enforced") {
  const auto f = [](double x) { return x; };
  CHECK_THROWS_AS(minimize_1d(f, SearchSpec{1.0, 0.0, 64, 1e-12, 0.0}), NumericError);
  CHECK_THROWS_AS(minimize_1d(f, SearchSpec{0.0, 1.0, 4, 1e-12, 0.0}), NumericError);
  CHECK_THROWS_AS(minimize_1d(f, SearchSpec{0.0, 1.0, 64, 0.0, 0.0}), NumericError);
}

}  // TEST_SUITE
