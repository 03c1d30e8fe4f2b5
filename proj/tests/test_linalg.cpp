#include <doctest.h>

#include "hsl/linalg.hpp"
#include "hsl/verify.hpp"

using namespace hsl;

namespace {

Mat u_example() {
  return Mat::from_rows({{Rat(-1), Rat(0)},
                         {Rat(0), Rat(1)},
                         {Rat(0), Rat(-1)},
                         {Rat(1), Rat(1)}},
                        2);
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(u_example()) == 2);
  CHECK(rank(Mat(3, 3)) == 0);
  Mat id = Mat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  CHECK(rank(id) == 2);
  CHECK(rank(Mat(0, 5)) == 0);
}

TEST_CASE("left nullspace of the example configuration") {
  Mat u = u_example();
  Mat ns = left_nullspace(u);
  REQUIRE(ns.rows == 2);
  for (size_t i = 0; i < ns.rows; ++i)
    CHECK(is_zero(vec_mat(ns.row(i), u)));
  // The stated spanning vectors really lie in the computed span.
  for (const Vec& target : {Vec{Rat(0), Rat(1), Rat(1), Rat(0)},
                            Vec{Rat(1), Rat(-1), Rat(0), Rat(1)}}) {
    CHECK(is_zero(vec_mat(target, u)));
    auto coeffs = solve_linear(ns.transpose(), target);
    CHECK(coeffs.has_value());
  }
}

TEST_CASE("left nullspace edge cases") {
  Mat id = Mat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  CHECK(left_nullspace(id).rows == 0);
  Mat zero_row = Mat::from_rows({{Rat(0)}}, 1);
  Mat ns = left_nullspace(zero_row);
  REQUIRE(ns.rows == 1);
  CHECK(ns.at(0, 0) == Rat(1));
}

TEST_CASE("solve_linear") {
  Mat id = Mat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  auto x = solve_linear(id, {Rat(3), Rat(1, 2)});
  REQUIRE(x.has_value());
  CHECK(*x == Vec{Rat(3), Rat(1, 2)});

  Mat singular = Mat::from_rows({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, 2);
  CHECK_FALSE(solve_linear(singular, {Rat(1), Rat(3)}).has_value());
  auto y = solve_linear(singular, {Rat(1), Rat(2)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == Rat(1));

  CHECK_THROWS_AS(solve_linear(singular, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("rank-nullity and exactness on random matrices") {
  Rng rng(2024);
  for (int t = 0; t < 60; ++t) {
    size_t m = 1 + rng.below(5), n = 1 + rng.below(4);
    Mat a(m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) a.at(i, j) = rng.small_rat();
    Mat ns = left_nullspace(a);
    CHECK(rank(a) + ns.rows == m);
    for (size_t i = 0; i < ns.rows; ++i)
      CHECK(is_zero(vec_mat(ns.row(i), a)));
    CHECK(rank(ns) == ns.rows);  // basis rows independent
    Vec b = sample_vec(rng, m);
    if (auto x = solve_linear(a, b)) CHECK(mat_vec(a, *x) == b);
  }
}
