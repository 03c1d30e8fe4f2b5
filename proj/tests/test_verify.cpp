#include <doctest.h>

#include "hsl/verify.hpp"

using namespace hsl;

// Short runs of each randomized suite; the acceptance binary runs them at
// full scale.

TEST_CASE("suite: decision dichotomy") {
  VerifyResult r = verify_dichotomy(40, 1);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("suite: open faces vs sign equivalence, provable implications") {
  VerifyResult r = verify_translation_sign_provable(12, 2);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("suite: lift sign sets are invariant under offset negation") {
  VerifyResult r = verify_lift_negation_invariance(12, 21);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("the lift converse genuinely fails on a two-point configuration") {
  // Offsets on opposite sides of the derived hyperplane whose lifts are two
  // distinct central lines either way, hence sign equivalent.
  Mat u = Mat::from_rows({{Rat(1)}, {Rat(1)}}, 1);
  Vec a{Rat(0), Rat(1)};
  Vec b{Rat(0), Rat(-1)};
  CHECK_FALSE(same_open_face(u, a, b));
  CHECK(sign_equivalent(elementary_lift(u, a).lift,
                        elementary_lift(u, b).lift));
  CHECK_FALSE(sign_equivalent(coning(u, a).cone, coning(u, b).cone));
  CHECK_FALSE(sign_equivalent(parallel_translation(u, a),
                              parallel_translation(u, b)));
}

TEST_CASE("suite: face transport and normal fans") {
  VerifyResult r = verify_face_transport(8, 3);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("suite: boundedness transport") {
  VerifyResult r = verify_boundedness(4, 4);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("suite: deformation posets") {
  VerifyResult r = verify_deformation_posets(4, 5);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("suite: equivalence chain") {
  VerifyResult r = verify_chain(6, 6);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("suite: normal vs sign equivalence for translations") {
  VerifyResult r = verify_normal_vs_sign(8, 7);
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("suite: covector axioms on a small configuration") {
  VerifyResult r = verify_axioms(Mat::from_rows({{Rat(1)}, {Rat(1)}}, 1));
  INFO(r.detail);
  CHECK(r.ok);
}

TEST_CASE("same-face partners really share the open derived face") {
  Rng rng(99);
  for (int t = 0; t < 20; ++t) {
    size_t n = 1 + rng.below(3), m = 1 + rng.below(5);
    Mat u = sample_matrix(rng, m, n);
    Vec a = sample_vec(rng, m);
    Vec b = same_face_partner(rng, u, a);
    CHECK(same_open_face(u, a, b));
  }
}
