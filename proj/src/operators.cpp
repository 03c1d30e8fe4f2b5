#include "hsl/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsl {

DerivedContext::DerivedContext(Mat u, DeformKind kind)
    : u_(std::move(u)), kind_(kind), faces_(enumerate_derived_faces(u_)) {}

const std::vector<SignVec>& DerivedContext::signs_of_face(
    const SignVec& face) const {
  auto it = memo_.find(face);
  if (it != memo_.end()) return it->second;
  const DerivedFaceRef* ref = nullptr;
  for (const DerivedFaceRef& f : faces_)
    if (f.sign == face) { ref = &f; break; }
  if (!ref) throw std::invalid_argument("signs_of_face: unknown derived face");
  std::vector<SignVec> signs;
  switch (kind_) {
    case DeformKind::Translate:
      signs = sign_set(parallel_translation(u_, ref->rep));
      break;
    case DeformKind::Cone:
      signs = sign_set(coning(u_, ref->rep).cone);
      break;
    case DeformKind::Lift:
      signs = sign_set(elementary_lift(u_, ref->rep).lift);
      break;
  }
  return memo_.emplace(face, std::move(signs)).first->second;
}

std::set<SignVec> DerivedContext::sign_operator(const FaceSubset& s) const {
  if (s.faces.empty()) throw std::invalid_argument("sign_operator: empty subset");
  std::set<SignVec> out;
  for (const SignVec& f : s.faces) {
    const std::vector<SignVec>& signs = signs_of_face(f);
    out.insert(signs.begin(), signs.end());
  }
  return out;
}

FaceSubset DerivedContext::face_operator(const SignVec& s) const {
  FaceSubset out;
  for (const DerivedFaceRef& f : faces_) {
    const std::vector<SignVec>& signs = signs_of_face(f.sign);
    if (std::binary_search(signs.begin(), signs.end(), s))
      out.faces.insert(f.sign);
  }
  return out;
}

FaceSubset DerivedContext::face_operator_set(const std::set<SignVec>& s) const {
  if (s.empty()) return all_faces();
  FaceSubset out = face_operator(*s.begin());
  for (auto it = std::next(s.begin()); it != s.end(); ++it) {
    FaceSubset next = face_operator(*it);
    std::set<SignVec> meet;
    for (const SignVec& f : out.faces)
      if (next.faces.count(f)) meet.insert(f);
    out.faces = std::move(meet);
    if (out.faces.empty()) break;
  }
  return out;
}

bool DerivedContext::fixed_point_check(const FaceSubset& s) const {
  return face_operator_set(sign_operator(s)).faces == s.faces;
}

FaceSubset DerivedContext::all_faces() const {
  FaceSubset out;
  for (const DerivedFaceRef& f : faces_) out.faces.insert(f.sign);
  return out;
}

FaceSubset DerivedContext::subset_of(
    const std::vector<SignVec>& face_signs) const {
  FaceSubset out;
  for (const SignVec& s : face_signs) {
    bool known = false;
    for (const DerivedFaceRef& f : faces_)
      if (f.sign == s) { known = true; break; }
    if (!known)
      throw std::invalid_argument("subset_of: unknown derived face sign " +
                                  s.str());
    out.faces.insert(s);
  }
  return out;
}

std::set<SignVec> sign_operator(const Mat& u, const FaceSubset& s,
                                DeformKind kind) {
  return DerivedContext(u, kind).sign_operator(s);
}

FaceSubset face_operator(const Mat& u, const SignVec& s, DeformKind kind) {
  return DerivedContext(u, kind).face_operator(s);
}

FaceSubset face_operator_set(const Mat& u, const std::set<SignVec>& s,
                             DeformKind kind) {
  return DerivedContext(u, kind).face_operator_set(s);
}

bool fixed_point_check(const Mat& u, const FaceSubset& s, DeformKind kind) {
  return DerivedContext(u, kind).fixed_point_check(s);
}

}  // namespace hsl
