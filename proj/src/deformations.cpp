#include "hsl/deformations.hpp"

#include <algorithm>
#include <set>

namespace hsl {

Arrangement parallel_translation(const Mat& u, const Vec& a) {
  return make_arrangement(u, a);
}

namespace {

// Row (u_i, -a_i): the linear hyperplane through the affine one placed at
// level x_{n+1} = 1, so signs at positive level reproduce the affine signs.
Mat lift_rows(const Mat& u, const Vec& a) {
  Mat rows(u.rows, u.cols + 1);
  for (size_t i = 0; i < u.rows; ++i) {
    for (size_t j = 0; j < u.cols; ++j) rows.at(i, j) = u.at(i, j);
    rows.at(i, u.cols) = -a[i];
  }
  return rows;
}

}  // namespace

ConedArrangement coning(const Mat& u, const Vec& a) {
  Arrangement base = make_arrangement(u, a);
  Mat rows(u.rows + 1, u.cols + 1);
  Mat lifted = lift_rows(u, a);
  for (size_t i = 0; i < u.rows; ++i)
    for (size_t j = 0; j <= u.cols; ++j) rows.at(i, j) = lifted.at(i, j);
  rows.at(u.rows, u.cols) = Rat(1);  // K0 last
  return ConedArrangement{std::move(base),
                          Arrangement{std::move(rows), Vec(u.rows + 1)}};
}

LiftedArrangement elementary_lift(const Mat& u, const Vec& a) {
  make_arrangement(u, a);  // validate
  return LiftedArrangement{Arrangement{lift_rows(u, a), Vec(u.rows)}};
}

std::vector<SignVec> transport_sign_coning(const Mat& u,
                                           const std::vector<SignVec>& signs) {
  if (signs.empty())
    throw std::invalid_argument("inconsistent input: empty sign set");
  std::set<SignVec> in(signs.begin(), signs.end());
  for (const SignVec& s : in) {
    if (s.size() != u.rows)
      throw std::invalid_argument("inconsistent input: sign length mismatch");
    for (const SignVec& t : in)
      if (!in.count(s.compose(t)))
        throw std::invalid_argument(
            "inconsistent input: sign set not closed under composition");
  }
  std::set<SignVec> out;
  for (const SignVec& s : in) {
    out.insert(s.append(1));
    out.insert(s.opposite().append(-1));
  }
  // The level-zero faces carry the signs of the direction arrangement.
  Arrangement direction = make_arrangement(u, Vec(u.rows));
  for (const SignVec& t : sign_set(direction)) out.insert(t.append(0));
  return std::vector<SignVec>(out.begin(), out.end());
}

std::vector<SignVec> transport_sign_lift(
    const std::vector<SignVec>& cone_signs) {
  std::set<SignVec> out;
  for (const SignVec& s : cone_signs) {
    std::vector<size_t> keep(s.size() ? s.size() - 1 : 0);
    for (size_t i = 0; i + 1 < s.size(); ++i) keep[i] = i;
    out.insert(s.restrict_to(keep));
  }
  return std::vector<SignVec>(out.begin(), out.end());
}

size_t distinct_hyperplane_count(const Mat& u, const Vec& a) {
  // H_{u_i,a_i} = H_{u_j,a_j} iff (u_i, a_i) and (u_j, a_j) are proportional.
  Mat rows(u.rows, u.cols + 1);
  for (size_t i = 0; i < u.rows; ++i) {
    for (size_t j = 0; j < u.cols; ++j) rows.at(i, j) = u.at(i, j);
    rows.at(i, u.cols) = a[i];
  }
  std::vector<Vec> reps;
  for (size_t i = 0; i < u.rows; ++i) {
    Vec row = rows.row(i);
    // Normalize by the first nonzero entry.
    Rat lead;
    for (const Rat& x : row)
      if (!x.is_zero()) { lead = x; break; }
    for (Rat& x : row) x /= lead;
    if (std::find(reps.begin(), reps.end(), row) == reps.end())
      reps.push_back(std::move(row));
  }
  return reps.size();
}

FaceCountReport face_count_report(const Mat& u, const Vec& a) {
  FaceCountReport rep;
  Arrangement translation = parallel_translation(u, a);
  rep.f_translation = static_cast<long>(sign_set(translation).size());
  rep.f_cone = static_cast<long>(sign_set(coning(u, a).cone).size());
  rep.f_lift = static_cast<long>(sign_set(elementary_lift(u, a).lift).size());
  rep.hypothesis_met = distinct_hyperplane_count(u, a) >= 2;
  if (rep.hypothesis_met)
    rep.identities_hold = rep.f_cone == 2 * rep.f_translation + 3 &&
                          rep.f_lift == 2 * rep.f_translation - 1;
  return rep;
}

}  // namespace hsl
