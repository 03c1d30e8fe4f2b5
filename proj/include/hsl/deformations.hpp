// The three deformations of the direction arrangement: parallel translation,
// coning and elementary lift, with sign-set transport maps and the face-count
// identity report.
#pragma once

#include <optional>
#include <vector>

#include "hsl/arrangement.hpp"
#include "hsl/signvec.hpp"

namespace hsl {

/// The arrangement (U, a).
Arrangement parallel_translation(const Mat& u, const Vec& a);

/// The coning lives in R^{n+1}: one linear hyperplane per row of U whose
/// slice at level x_{n+1} = 1 is the affine hyperplane <u_i, x> = a_i, plus
/// the level hyperplane K0: x_{n+1} = 0 appended last (labelled m+1).
struct ConedArrangement {
  Arrangement base;  // A_a in R^n
  Arrangement cone;  // m+1 rows in R^{n+1}, all offsets zero
};

ConedArrangement coning(const Mat& u, const Vec& a);

/// The coning minus K0.
struct LiftedArrangement {
  Arrangement lift;  // m rows in R^{n+1}, all offsets zero
};

LiftedArrangement elementary_lift(const Mat& u, const Vec& a);

/// Sign set of the coning from the sign set of the translation: each affine
/// sign s contributes (s,+) and (-s,-); the faces at level zero contribute
/// (t,0) for every sign t of the direction arrangement A_o. The input must be
/// composition-closed (the closure every arrangement sign set satisfies);
/// otherwise throws std::invalid_argument("inconsistent input").
std::vector<SignVec> transport_sign_coning(const Mat& u,
                                           const std::vector<SignVec>& signs);

/// Restriction of each coned sign to the first m coordinates, deduplicated.
std::vector<SignVec> transport_sign_lift(const std::vector<SignVec>& cone_signs);

struct FaceCountReport {
  long f_translation = 0;
  long f_cone = 0;
  long f_lift = 0;
  bool hypothesis_met = false;          // at least two distinct hyperplanes
  std::optional<bool> identities_hold;  // unset when the hypothesis fails
};

/// Nonempty-face counts of the three deformations; the identities
/// f_cone = 2 f_translation + 3 and f_lift = 2 f_translation - 1 are checked
/// only when A_a has at least two distinct hyperplanes.
FaceCountReport face_count_report(const Mat& u, const Vec& a);

/// Number of distinct hyperplanes (rows equal up to a nonzero scalar on the
/// full row (u_i, a_i)).
size_t distinct_hyperplane_count(const Mat& u, const Vec& a);

}  // namespace hsl
