#include "hsl/derived.hpp"

#include <algorithm>
#include <functional>

namespace hsl {

namespace {

// Scale a rational dependence to coprime integers with positive leading entry.
Vec canonicalize_circuit_vector(const Vec& v) {
  mpz_class lcm_den(1);
  for (const Rat& x : v)
    if (!x.is_zero()) lcm_den = lcm(lcm_den, x.den());
  Vec scaled(v.size());
  mpz_class gcd_num(0);
  for (size_t i = 0; i < v.size(); ++i) {
    scaled[i] = v[i] * Rat(lcm_den);
    if (!scaled[i].is_zero()) gcd_num = gcd(gcd_num, scaled[i].num());
  }
  int lead = 0;
  for (const Rat& x : scaled) {
    if (!x.is_zero()) { lead = x.sign(); break; }
  }
  Rat factor = Rat(gcd_num) * Rat(lead < 0 ? -1 : 1);
  for (Rat& x : scaled) x /= factor;
  return scaled;
}

void subsets_of_size(size_t m, size_t k,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(k);
  std::function<void(size_t, size_t)> rec = [&](size_t at, size_t start) {
    if (at == k) { fn(pick); return; }
    for (size_t i = start; i + (k - at) <= m; ++i) {
      pick[at] = static_cast<int>(i);
      rec(at + 1, i + 1);
    }
  };
  if (k <= m) rec(0, 0);
}

}  // namespace

std::vector<Circuit> enumerate_circuits(const Mat& u) {
  for (size_t i = 0; i < u.rows; ++i)
    if (is_zero(u.row(i)))
      throw std::invalid_argument("enumerate_circuits: zero row");
  std::vector<Circuit> out;
  size_t r = rank(u);
  for (size_t k = 2; k <= std::min(u.rows, r + 1); ++k) {
    subsets_of_size(u.rows, k, [&](const std::vector<int>& sub) {
      for (const Circuit& c : out)
        if (std::includes(sub.begin(), sub.end(), c.support.begin(),
                          c.support.end()))
          return;  // proper supersets of circuits are not minimal
      Mat rows = u.select_rows(sub);
      Mat null = left_nullspace(rows);
      if (null.rows == 0) return;  // independent
      if (null.rows != 1)
        throw std::logic_error("circuit scan: dependent set skipped minimality");
      Circuit c;
      c.support = sub;
      Vec dep(u.rows);
      for (size_t i = 0; i < sub.size(); ++i) dep[sub[i]] = null.at(0, i);
      c.vector = canonicalize_circuit_vector(dep);
      for (int i : sub)
        if (c.vector[i].is_zero())
          throw std::logic_error("circuit scan: dependence not fully supported");
      out.push_back(std::move(c));
    });
  }
  return out;  // generated in (size, lex) order already
}

Arrangement derived_arrangement(const Mat& u) {
  std::vector<Circuit> circuits = enumerate_circuits(u);
  std::vector<Vec> rows;
  for (const Circuit& c : circuits) rows.push_back(c.vector);
  // Distinct circuits have distinct supports, so no two canonical vectors are
  // proportional; dedupe defensively all the same.
  std::vector<Vec> unique_rows;
  for (const Vec& row : rows)
    if (std::find(unique_rows.begin(), unique_rows.end(), row) ==
        unique_rows.end())
      unique_rows.push_back(row);
  return Arrangement{Mat::from_rows(unique_rows, u.rows),
                     Vec(unique_rows.size())};
}

SignVec locate_open_face(const Mat& u, const Vec& a) {
  if (a.size() != u.rows)
    throw std::invalid_argument("locate_open_face: offset length mismatch");
  std::vector<Circuit> circuits = enumerate_circuits(u);
  SignVec s(circuits.size());
  for (size_t i = 0; i < circuits.size(); ++i)
    s[i] = sign_of(dot(circuits[i].vector, a));
  return s;
}

bool same_open_face(const Mat& u, const Vec& a, const Vec& b) {
  return locate_open_face(u, a) == locate_open_face(u, b);
}

int derived_face_dimension(const Mat& u, const Vec& a) {
  std::vector<Circuit> circuits = enumerate_circuits(u);
  std::vector<Vec> tight;
  for (const Circuit& c : circuits)
    if (dot(c.vector, a).is_zero()) tight.push_back(c.vector);
  return static_cast<int>(u.rows) -
         static_cast<int>(rank(Mat::from_rows(tight, u.rows)));
}

std::vector<DerivedFaceRef> enumerate_derived_faces(const Mat& u,
                                                    size_t max_circuits) {
  Arrangement da = derived_arrangement(u);
  if (da.m() > max_circuits)
    throw DeskScaleExceededError("derived sign enumeration");
  std::vector<DerivedFaceRef> out;
  for (const ArrangementFace& f : faces(da))
    out.push_back(DerivedFaceRef{f.sign, f.witness});
  return out;
}

}  // namespace hsl
