#include <doctest.h>

#include <set>

#include "hsl/arrangement.hpp"
#include "hsl/verify.hpp"

using namespace hsl;

namespace {

Arrangement triangle_arrangement() {
  return make_arrangement(example_config(), {Rat(0), Rat(1), Rat(0), Rat(1)});
}

Arrangement two_points() {  // x = 0 and x = 1 on the line
  return make_arrangement(Mat::from_rows({{Rat(1)}, {Rat(1)}}, 1),
                          {Rat(0), Rat(1)});
}

std::set<std::string> sign_strings(const Arrangement& arr) {
  std::set<std::string> out;
  for (const SignVec& s : sign_set(arr)) out.insert(s.str());
  return out;
}

}  // namespace

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(make_arrangement(Mat::from_rows({{Rat(0)}}, 1), {Rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      make_arrangement(Mat::from_rows({{Rat(1)}}, 1), {Rat(1), Rat(2)}),
      std::invalid_argument);
}

TEST_CASE("multi-arrangement detection") {
  CHECK(is_multi(example_config()));  // rows 2 and 3 are opposite
  Mat free3 = Mat::from_rows(
      {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}, 2);
  CHECK_FALSE(is_multi(free3));
}

TEST_CASE("signs of points in the triangle arrangement") {
  Arrangement arr = triangle_arrangement();
  CHECK(sign_of_point(arr, {Rat(1, 4), Rat(1, 4)}).str() == "----");
  CHECK(sign_of_point(arr, {Rat(0), Rat(0)}).str() == "0-0-");
  CHECK(sign_of_point(arr, {Rat(1, 2), Rat(0)}).str() == "--0-");
  CHECK_THROWS_AS(sign_of_point(arr, {Rat(0)}), std::invalid_argument);
}

TEST_CASE("sign set of two points on a line") {
  CHECK(sign_strings(two_points()) ==
        std::set<std::string>{"--", "0-", "+-", "+0", "++"});
}

TEST_CASE("one hyperplane has three signs") {
  Arrangement arr = make_arrangement(Mat::from_rows({{Rat(2)}}, 1), {Rat(1)});
  CHECK(sign_strings(arr) == std::set<std::string>{"-", "0", "+"});
}

TEST_CASE("sign DFS equals brute force") {
  Rng rng(909);
  for (int t = 0; t < 10; ++t) {
    size_t n = 1 + rng.below(3), m = 1 + rng.below(5);
    Arrangement arr =
        make_arrangement(sample_matrix(rng, m, n), sample_vec(rng, m));
    CHECK(sign_set(arr) == sign_set_bruteforce(arr));
  }
  Arrangement tri = triangle_arrangement();
  auto signs = sign_set(tri);
  CHECK(signs == sign_set_bruteforce(tri));
  std::set<std::string> strs = sign_strings(tri);
  CHECK(strs.count("----"));
  CHECK(strs.count("0-0-"));
}

TEST_CASE("face witnesses reproduce their signs and dimensions") {
  for (const Arrangement& arr : {triangle_arrangement(), two_points()}) {
    for (const ArrangementFace& f : faces(arr)) {
      CHECK(sign_of_point(arr, f.witness) == f.sign);
      std::vector<int> tight;
      for (size_t i = 0; i < arr.m(); ++i)
        if (f.sign[i] == 0) tight.push_back(static_cast<int>(i));
      CHECK(f.dimension ==
            static_cast<int>(arr.n()) -
                static_cast<int>(rank(arr.u.select_rows(tight))));
    }
  }
}

TEST_CASE("face poset is the entrywise sign order") {
  Arrangement arr = triangle_arrangement();
  CHECK(sign_leq(SignVec::parse("0-0-"), SignVec::parse("--0-")));
  CHECK_FALSE(sign_leq(SignVec::parse("--0-"), SignVec::parse("0-0-")));
  CHECK(sign_leq(SignVec::parse("0-"), SignVec::parse("--")));
  CHECK(sign_leq(SignVec::parse("0-"), SignVec::parse("+-")));
  Poset p = face_poset(arr);
  CHECK(p.size() == sign_set(arr).size());
}

TEST_CASE("sign order matches geometric closure membership") {
  Rng rng(4242);
  for (int t = 0; t < 6; ++t) {
    size_t n = 1 + rng.below(2), m = 1 + rng.below(4);
    Arrangement arr =
        make_arrangement(sample_matrix(rng, m, n), sample_vec(rng, m));
    auto fs = faces(arr);
    for (const ArrangementFace& f1 : fs)
      for (const ArrangementFace& f2 : fs) {
        // f1 <= f2 iff the witness of f1 lies in the closure of f2.
        MixedSystem closure;
        closure.n = arr.n();
        for (size_t i = 0; i < arr.m(); ++i) {
          Rel rel = f2.sign[i] == 0 ? Rel::EQ
                    : f2.sign[i] < 0 ? Rel::LE
                                     : Rel::GE;
          closure.add(arr.u.row(i), rel, arr.a[i]);
        }
        CHECK(sign_leq(f1.sign, f2.sign) == satisfies(closure, f1.witness));
      }
  }
}

TEST_CASE("intersection poset of the triangle arrangement") {
  // Flats: the plane, four lines, and three vertices (one of them triple).
  CHECK(intersection_poset(triangle_arrangement()).size() == 8);
  Arrangement one = make_arrangement(Mat::from_rows({{Rat(1)}}, 1), {Rat(0)});
  CHECK(intersection_poset(one).size() == 2);
  Arrangement cross = make_arrangement(
      Mat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2),
      {Rat(0), Rat(0)});
  CHECK(intersection_poset(cross).size() == 4);
}

TEST_CASE("sign equivalence") {
  Mat u = example_config();
  Arrangement a = make_arrangement(u, {Rat(0), Rat(1), Rat(0), Rat(1)});
  Arrangement scaled = make_arrangement(u, {Rat(0), Rat(2), Rat(0), Rat(2)});
  Arrangement b1 = make_arrangement(u, {Rat(0), Rat(3, 2), Rat(0), Rat(1)});
  CHECK(sign_equivalent(a, a));
  CHECK(sign_equivalent(a, scaled));
  CHECK_FALSE(sign_equivalent(a, b1));
  Arrangement one = make_arrangement(Mat::from_rows({{Rat(1)}}, 1), {Rat(0)});
  CHECK_THROWS_AS(sign_equivalent(a, one), std::invalid_argument);
}

TEST_CASE("combinatorial and semilattice equivalence") {
  Arrangement quadrant = make_arrangement(
      Mat::from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2),
      {Rat(0), Rat(0)});
  Arrangement rotated = make_arrangement(
      Mat::from_rows({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, 2),
      {Rat(0), Rat(0)});
  Arrangement parallel = make_arrangement(
      Mat::from_rows({{Rat(1), Rat(0)}, {Rat(1), Rat(0)}}, 2),
      {Rat(0), Rat(1)});
  CHECK(combinatorially_equivalent(quadrant, rotated));
  CHECK_FALSE(combinatorially_equivalent(parallel, quadrant));  // 5 vs 9 faces
  CHECK(semilattice_equivalent(quadrant, rotated));
  CHECK_FALSE(semilattice_equivalent(parallel, quadrant));  // 3 vs 4 flats
  CHECK(semilattice_equivalent(parallel, parallel));
}

TEST_CASE("valid active triples") {
  Arrangement arr = two_points();
  auto fs = faces(arr);
  for (const ArrangementFace& f : fs) {
    ActiveTriple t = valid_active_triple(arr, f);
    if (f.sign.str() == "--") {
      // The region left of both: only the first hyperplane touches it.
      CHECK(t.I.empty());
      CHECK(t.J == std::vector<int>{0});
      CHECK(t.K.empty());
    }
    if (f.sign.str() == "+-") {
      // Bounded region: both hyperplanes touch the closure.
      CHECK(t.J == std::vector<int>{1});
      CHECK(t.K == std::vector<int>{0});
    }
    if (f.sign.str() == "0-") {
      CHECK(t.I == std::vector<int>{0});
      CHECK(t.J.empty());
      CHECK(t.K.empty());
    }
  }
  Arrangement one = make_arrangement(Mat::from_rows({{Rat(1)}}, 1), {Rat(0)});
  ArrangementFace hyperplane_face{SignVec::parse("0"), {Rat(0)}, 0};
  ActiveTriple t = valid_active_triple(one, hyperplane_face);
  CHECK(t.I == std::vector<int>{0});
  CHECK(t.J.empty());
  CHECK(t.K.empty());
  ArrangementFace bogus{SignVec::parse("+"), {Rat(-1)}, 1};
  CHECK_THROWS_AS(valid_active_triple(one, bogus), std::invalid_argument);
}

TEST_CASE("normal equivalence of translations") {
  // The example configuration is a multi-arrangement, so the decision
  // procedure refuses it.
  CHECK_THROWS_AS(normally_equivalent_translations(
                      example_config(), {Rat(0), Rat(1), Rat(0), Rat(1)},
                      {Rat(0), Rat(2), Rat(0), Rat(2)}),
                  MultiArrangementError);

  Mat free3 = Mat::from_rows(
      {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}, 2);
  Vec a{Rat(0), Rat(0), Rat(2)};
  Vec scaled{Rat(0), Rat(0), Rat(1)};
  CHECK(normally_equivalent_translations(free3, a, a));
  CHECK(normally_equivalent_translations(free3, a, scaled));
  Vec central{Rat(0), Rat(0), Rat(0)};  // all three concurrent
  CHECK_FALSE(normally_equivalent_translations(free3, a, central));
}

TEST_CASE("reorientation and relabeling") {
  Mat u = Mat::from_rows(
      {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}, 2);
  Arrangement arr = make_arrangement(u, {Rat(0), Rat(0), Rat(2)});
  Arrangement flipped = reorient(arr, {2});
  CHECK(flipped.u.row(2) == Vec{Rat(-1), Rat(-1)});
  CHECK(flipped.a[2] == Rat(-2));
  Arrangement twice = reorient(flipped, {2});
  CHECK(twice.u == arr.u);
  CHECK(twice.a == arr.a);

  Arrangement same = relabel(arr, {0, 1, 2});
  CHECK(same.u == arr.u);
  CHECK(same.a == arr.a);
  Arrangement swapped = relabel(arr, {1, 0, 2});
  CHECK(swapped.u.row(0) == arr.u.row(1));
  CHECK(swapped.a[0] == arr.a[1]);
  CHECK_THROWS_AS(relabel(arr, {0, 0, 2}), std::invalid_argument);
}

TEST_CASE("reorient and relabel act coordinatewise on sign sets") {
  Rng rng(515);
  for (int t = 0; t < 6; ++t) {
    size_t n = 1 + rng.below(2), m = 2 + rng.below(3);
    Arrangement arr =
        make_arrangement(sample_matrix(rng, m, n), sample_vec(rng, m));
    std::vector<int> flips;
    for (size_t i = 0; i < m; ++i)
      if (rng.below(2)) flips.push_back(static_cast<int>(i));
    std::set<SignVec> expected;
    for (const SignVec& s : sign_set(arr)) {
      SignVec w = s;
      for (int i : flips) w[i] = static_cast<Sign>(-w[i]);
      expected.insert(w);
    }
    auto got = sign_set(reorient(arr, flips));
    CHECK(std::set<SignVec>(got.begin(), got.end()) == expected);

    std::vector<int> perm(m);
    for (size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i);
    for (size_t i = m; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::set<SignVec> expected_perm;
    for (const SignVec& s : sign_set(arr)) {
      SignVec w(m);
      for (size_t i = 0; i < m; ++i) w[i] = s[perm[i]];
      expected_perm.insert(w);
    }
    auto got_perm = sign_set(relabel(arr, perm));
    CHECK(std::set<SignVec>(got_perm.begin(), got_perm.end()) == expected_perm);
  }
}
