// The Sign and Face operators over the finite representation of offset space
// (the open faces of the derived arrangement), and the fixed-point test whose
// solutions are exactly those open faces.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "hsl/deformations.hpp"
#include "hsl/derived.hpp"

namespace hsl {

/// Which sign set is attached to an offset vector by the operators.
enum class DeformKind { Translate, Cone, Lift };

/// A union of open faces of the derived arrangement of a fixed U, identified
/// by their derived sign vectors.
struct FaceSubset {
  std::set<SignVec> faces;
};

/// Shared state for operator evaluations over one configuration: the derived
/// face list plus memoized sign sets per representative. The memo is only
/// ever extended with recomputable values, so concurrent population would be
/// idempotent.
class DerivedContext {
 public:
  explicit DerivedContext(Mat u, DeformKind kind = DeformKind::Translate);

  const std::vector<DerivedFaceRef>& faces() const { return faces_; }
  const Mat& config() const { return u_; }

  /// Union of the sign sets attached to the member faces. Throws on empty.
  std::set<SignVec> sign_operator(const FaceSubset& s) const;

  /// All derived open faces whose representative realizes the sign vector.
  FaceSubset face_operator(const SignVec& s) const;

  /// Intersection over the set; the empty set yields all faces.
  FaceSubset face_operator_set(const std::set<SignVec>& s) const;

  /// Face(Sign(S)) == S; true exactly on single open faces.
  bool fixed_point_check(const FaceSubset& s) const;

  /// The sign set attached to one derived face (memoized).
  const std::vector<SignVec>& signs_of_face(const SignVec& face) const;

  FaceSubset all_faces() const;
  FaceSubset subset_of(const std::vector<SignVec>& face_signs) const;

 private:
  Mat u_;
  DeformKind kind_;
  std::vector<DerivedFaceRef> faces_;
  mutable std::map<SignVec, std::vector<SignVec>> memo_;
};

/// One-shot wrappers matching the operator definitions.
std::set<SignVec> sign_operator(const Mat& u, const FaceSubset& s,
                                DeformKind kind = DeformKind::Translate);
FaceSubset face_operator(const Mat& u, const SignVec& s,
                         DeformKind kind = DeformKind::Translate);
FaceSubset face_operator_set(const Mat& u, const std::set<SignVec>& s,
                             DeformKind kind = DeformKind::Translate);
bool fixed_point_check(const Mat& u, const FaceSubset& s,
                       DeformKind kind = DeformKind::Translate);

}  // namespace hsl
