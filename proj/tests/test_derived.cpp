#include <doctest.h>

#include <set>

#include "hsl/derived.hpp"
#include "hsl/polyhedron.hpp"
#include "hsl/verify.hpp"

using namespace hsl;

namespace {

// Independent circuit oracle: a subset is a circuit iff it is dependent and
// every proper subset is independent.
std::set<std::vector<int>> circuit_supports_oracle(const Mat& u) {
  std::set<std::vector<int>> out;
  for (size_t mask = 1; mask < (size_t{1} << u.rows); ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < u.rows; ++i)
      if (mask & (size_t{1} << i)) sub.push_back(static_cast<int>(i));
    Mat rows = u.select_rows(sub);
    if (rank(rows) == sub.size()) continue;  // independent
    bool minimal = true;
    for (size_t drop = 0; drop < sub.size() && minimal; ++drop) {
      std::vector<int> smaller;
      for (size_t i = 0; i < sub.size(); ++i)
        if (i != drop) smaller.push_back(sub[i]);
      if (rank(u.select_rows(smaller)) < smaller.size()) minimal = false;
    }
    if (minimal) out.insert(sub);
  }
  return out;
}

}  // namespace

TEST_CASE("circuits of the example configuration") {
  Mat u = example_config();
  auto circuits = enumerate_circuits(u);
  REQUIRE(circuits.size() == 3);
  CHECK(circuits[0].support == std::vector<int>{1, 2});
  CHECK(circuits[0].vector == Vec{Rat(0), Rat(1), Rat(1), Rat(0)});
  CHECK(circuits[1].support == std::vector<int>{0, 1, 3});
  CHECK(circuits[1].vector == Vec{Rat(1), Rat(-1), Rat(0), Rat(1)});
  CHECK(circuits[2].support == std::vector<int>{0, 2, 3});
  CHECK(circuits[2].vector == Vec{Rat(1), Rat(0), Rat(1), Rat(1)});
  for (const Circuit& c : circuits) {
    CHECK(is_zero(vec_mat(c.vector, u)));
    std::vector<int> support;
    for (size_t i = 0; i < c.vector.size(); ++i)
      if (!c.vector[i].is_zero()) support.push_back(static_cast<int>(i));
    CHECK(support == c.support);
  }
}

TEST_CASE("circuit enumeration matches the subset oracle") {
  Rng rng(606);
  for (int t = 0; t < 15; ++t) {
    size_t n = 1 + rng.below(3), m = 1 + rng.below(5);
    Mat u = sample_matrix(rng, m, n);
    std::set<std::vector<int>> got;
    for (const Circuit& c : enumerate_circuits(u)) got.insert(c.support);
    CHECK(got == circuit_supports_oracle(u));
  }
}

TEST_CASE("independent configurations have no circuits") {
  Mat id = Mat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  CHECK(enumerate_circuits(id).empty());
}

TEST_CASE("a repeated vector forms the smallest circuit") {
  Mat u = Mat::from_rows({{Rat(1)}, {Rat(1)}}, 1);
  auto circuits = enumerate_circuits(u);
  REQUIRE(circuits.size() == 1);
  CHECK(circuits[0].support == std::vector<int>{0, 1});
  CHECK(circuits[0].vector == Vec{Rat(1), Rat(-1)});
}

TEST_CASE("canonical circuit vectors are coprime integers, leading positive") {
  Rng rng(607);
  for (int t = 0; t < 10; ++t) {
    size_t n = 1 + rng.below(3), m = 2 + rng.below(4);
    Mat u = sample_matrix(rng, m, n);
    auto circuits = enumerate_circuits(u);
    std::set<std::vector<int>> supports;
    for (size_t x = 0; x < circuits.size(); ++x)
      for (size_t y = x + 1; y < circuits.size(); ++y) {
        // No two canonical circuit vectors are proportional: their supports
        // differ, so rank of the pair is 2.
        Mat pair = Mat::from_rows({circuits[x].vector, circuits[y].vector},
                                  u.rows);
        CHECK(rank(pair) == 2);
      }
    for (const Circuit& c : circuits) {
      CHECK(supports.insert(c.support).second);  // distinct supports
      mpz_class g(0);
      int lead = 0;
      for (const Rat& x : c.vector) {
        CHECK(x.is_integer());
        if (!x.is_zero()) {
          g = gcd(g, x.num());
          if (lead == 0) lead = x.sign();
        }
      }
      CHECK(g == 1);
      CHECK(lead == 1);
    }
  }
}

TEST_CASE("derived arrangement") {
  Mat u = example_config();
  Arrangement da = derived_arrangement(u);
  REQUIRE(da.m() == 3);
  CHECK(da.n() == 4);
  CHECK(da.u.row(0) == Vec{Rat(0), Rat(1), Rat(1), Rat(0)});
  CHECK(da.u.row(1) == Vec{Rat(1), Rat(-1), Rat(0), Rat(1)});
  CHECK(da.u.row(2) == Vec{Rat(1), Rat(0), Rat(1), Rat(1)});
  CHECK(is_zero(da.a));

  Mat id = Mat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  CHECK(derived_arrangement(id).m() == 0);

  Mat rep = Mat::from_rows({{Rat(1)}, {Rat(1)}}, 1);
  Arrangement da1 = derived_arrangement(rep);
  REQUIRE(da1.m() == 1);
  CHECK(da1.u.row(0) == Vec{Rat(1), Rat(-1)});
}

TEST_CASE("point location in the derived arrangement") {
  Mat u = example_config();
  CHECK(locate_open_face(u, {Rat(0), Rat(1), Rat(0), Rat(1)}).str() == "+0+");
  CHECK(locate_open_face(u, {Rat(0), Rat(3, 2), Rat(0), Rat(1)}).str() ==
        "+-+");
  CHECK(locate_open_face(u, {Rat(0), Rat(0), Rat(0), Rat(1)}).str() == "0++");
  CHECK_THROWS_AS(locate_open_face(u, {Rat(0)}), std::invalid_argument);
}

TEST_CASE("same open face") {
  Mat u = example_config();
  Vec a{Rat(0), Rat(1), Rat(0), Rat(1)};
  CHECK(same_open_face(u, a, {Rat(0), Rat(2), Rat(0), Rat(2)}));
  CHECK_FALSE(same_open_face(u, a, {Rat(0), Rat(3, 2), Rat(0), Rat(1)}));
  CHECK(same_open_face(u, a, a));
}

TEST_CASE("enumerating derived open faces") {
  Mat id = Mat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
  auto trivial = enumerate_derived_faces(id);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].rep == Vec(2));

  Mat rep = Mat::from_rows({{Rat(1)}, {Rat(1)}}, 1);
  auto three = enumerate_derived_faces(rep);
  REQUIRE(three.size() == 3);
  std::set<std::string> signs;
  for (const DerivedFaceRef& f : three) signs.insert(f.sign.str());
  CHECK(signs == std::set<std::string>{"-", "0", "+"});

  Mat u = example_config();
  // The three circuit normals satisfy c3 = c1 + c2, so the derived
  // arrangement is three concurrent hyperplanes: 13 open faces.
  auto all = enumerate_derived_faces(u);
  CHECK(all.size() == 13);
  std::set<std::string> strs;
  for (const DerivedFaceRef& f : all) {
    strs.insert(f.sign.str());
    CHECK(locate_open_face(u, f.rep) == f.sign);
  }
  CHECK(strs.count("+0+"));
  CHECK(strs.count("+-+"));
  CHECK(strs.count("0++"));

  CHECK_THROWS_AS(enumerate_derived_faces(u, 2), DeskScaleExceededError);
}

TEST_CASE("located signs of random points are enumerated") {
  Rng rng(808);
  for (int t = 0; t < 10; ++t) {
    size_t n = 1 + rng.below(3), m = 1 + rng.below(4);
    Mat u = sample_matrix(rng, m, n);
    auto faces = enumerate_derived_faces(u);
    Vec x = sample_vec(rng, m);
    SignVec s = locate_open_face(u, x);
    bool found = false;
    for (const DerivedFaceRef& f : faces)
      if (f.sign == s) found = true;
    CHECK(found);
  }
}

TEST_CASE("nonemptiness transports to the closed derived face") {
  Rng rng(1313);
  int checked = 0;
  for (int t = 0; t < 40 && checked < 15; ++t) {
    size_t n = 1 + rng.below(3), m = 1 + rng.below(5);
    Mat u = sample_matrix(rng, m, n);
    Tetrad td;
    td.a = sample_vec(rng, m);
    sample_partition(rng, m, td.I, td.J, td.K);
    if (is_empty(u, td)) continue;
    ++checked;
    // b = t*a + U*w with t in {0,1} lies in the closure of the open face of
    // a (each circuit sign is equal or zero), so P(b,...) stays nonempty.
    for (long scale : {0L, 1L}) {
      Vec w = sample_vec(rng, u.cols);
      Vec b(m);
      for (size_t i = 0; i < m; ++i)
        b[i] = Rat(scale) * td.a[i] + dot(u.row(i), w);
      SignVec sa = locate_open_face(u, td.a);
      SignVec sb = locate_open_face(u, b);
      for (size_t c = 0; c < sa.size(); ++c)
        CHECK((sb[c] == 0 || sb[c] == sa[c]));
      Tetrad tb = td;
      tb.a = b;
      CHECK_FALSE(is_empty(u, tb));
    }
  }
  CHECK(checked > 0);
}
