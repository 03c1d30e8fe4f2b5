#include "hsl/linalg.hpp"

#include <stdexcept>

namespace hsl {

Mat Mat::from_rows(const std::vector<Vec>& rs, size_t ncols) {
  Mat m(rs.size(), ncols);
  for (size_t i = 0; i < rs.size(); ++i) {
    if (rs[i].size() != ncols)
      throw std::invalid_argument("Mat::from_rows: ragged rows");
    for (size_t j = 0; j < ncols; ++j) m.at(i, j) = rs[i][j];
  }
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
  Mat m(idx.size(), cols);
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || static_cast<size_t>(idx[i]) >= rows)
      throw std::out_of_range("Mat::select_rows: bad index");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = at(idx[i], j);
  }
  return m;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  if (x.size() != m.cols) throw std::invalid_argument("mat_vec: size mismatch");
  Vec y(m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) y[i] += m.at(i, j) * x[j];
  return y;
}

Vec vec_mat(const Vec& v, const Mat& m) {
  if (v.size() != m.rows) throw std::invalid_argument("vec_mat: size mismatch");
  Vec y(m.cols);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) y[j] += v[i] * m.at(i, j);
  return y;
}

Rref rref(Mat m) {
  Rref out;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t p = r;
    while (p < m.rows && m.at(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (size_t j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rat f = m.at(i, c);
      for (size_t j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.r = std::move(m);
  return out;
}

size_t rank(const Mat& m) { return rref(m).rank; }

Mat right_nullspace(const Mat& m) {
  Rref e = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols);
    v[f] = Rat(1);
    for (size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.r.at(r, f);
    basis.push_back(std::move(v));
  }
  return Mat::from_rows(basis, m.cols);
}

Mat left_nullspace(const Mat& m) { return right_nullspace(m.transpose()); }

std::optional<Vec> solve_linear(const Mat& m, const Vec& b) {
  if (b.size() != m.rows)
    throw std::invalid_argument("solve_linear: rhs length mismatch");
  Mat aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  Rref e = rref(std::move(aug));
  for (size_t c : e.pivots)
    if (c == m.cols) return std::nullopt;  // pivot in the rhs column
  Vec x(m.cols);
  for (size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.r.at(r, m.cols);
  return x;
}

}  // namespace hsl
