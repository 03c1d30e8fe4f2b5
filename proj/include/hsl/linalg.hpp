// Exact rational matrices: reduced echelon form, rank, nullspaces, solving.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hsl/rational.hpp"

namespace hsl {

/// Dense rational matrix, row-major. Rectangular by construction.
struct Mat {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }

  Vec row(size_t i) const {
    return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }

  static Mat from_rows(const std::vector<Vec>& rs, size_t ncols);
  Mat transpose() const;
  Mat select_rows(const std::vector<int>& idx) const;

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

/// y = M x (x has length cols, result length rows).
Vec mat_vec(const Mat& m, const Vec& x);
/// y = v M (v has length rows, result length cols).
Vec vec_mat(const Vec& v, const Mat& m);

struct Rref {
  Mat r;                       // reduced row echelon form, zero rows kept
  std::vector<size_t> pivots;  // pivot column per pivot row
  size_t rank = 0;
};

/// Gauss-Jordan with the first nonzero entry in column order as pivot,
/// so the output is deterministic.
Rref rref(Mat m);

size_t rank(const Mat& m);

/// Basis (as rows) of {x : M x = 0}, in increasing free-column order.
Mat right_nullspace(const Mat& m);

/// Basis (as rows) of {y : y M = 0}. Row count = rows(M) - rank(M).
Mat left_nullspace(const Mat& m);

/// One exact solution of M x = b, or nullopt when inconsistent.
/// Throws on length mismatch.
std::optional<Vec> solve_linear(const Mat& m, const Vec& b);

}  // namespace hsl
