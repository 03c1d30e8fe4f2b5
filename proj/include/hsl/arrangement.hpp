// Real hyperplane arrangements (U, a): sign vectors of points and faces, the
// realized sign set, face and intersection posets, the four equivalence
// predicates, reorientation and relabeling.
#pragma once

#include <vector>

#include "hsl/linalg.hpp"
#include "hsl/polyhedron.hpp"
#include "hsl/poset.hpp"
#include "hsl/signvec.hpp"

namespace hsl {

struct MultiArrangementError : std::runtime_error {
  MultiArrangementError()
      : std::runtime_error("multi-arrangement unsupported") {}
};

/// Hyperplanes <u_i, x> = a_i, rows of U nonzero. Repeated or parallel rows
/// (multi-arrangements) are permitted.
struct Arrangement {
  Mat u;
  Vec a;

  size_t m() const { return u.rows; }
  size_t n() const { return u.cols; }
};

/// Validating constructor; throws on zero rows or length mismatch.
Arrangement make_arrangement(Mat u, Vec a);

/// Some pair of rows proportional?
bool is_multi(const Mat& u);

/// Entry i is the exact sign of <u_i, x> - a_i.
SignVec sign_of_point(const Arrangement& arr, const Vec& x);

struct ArrangementFace {
  SignVec sign;
  Vec witness;  // relative-interior point; reproduces sign exactly
  int dimension = 0;
};

/// All faces, one per realized sign vector, sorted by sign (lexicographic,
/// 0 < - < +). DFS over partial sign assignments with feasibility pruning.
std::vector<ArrangementFace> faces(const Arrangement& arr);

/// The realized sign vectors, sorted. Equals {sign of F : F face}.
std::vector<SignVec> sign_set(const Arrangement& arr);

/// Test oracle: strict-feasibility check of each of the 3^m candidates.
std::vector<SignVec> sign_set_bruteforce(const Arrangement& arr);

/// Elements are the sign vectors; s <= w iff entrywise in the sign order.
Poset face_poset(const Arrangement& arr);

/// Flats (nonempty intersections of hyperplane subsets, including the whole
/// space), each keyed by the echelon form of its equality system, ordered by
/// reverse inclusion.
Poset intersection_poset(const Arrangement& arr);

bool sign_equivalent(const Arrangement& a, const Arrangement& b);
bool combinatorially_equivalent(const Arrangement& a, const Arrangement& b);
bool semilattice_equivalent(const Arrangement& a, const Arrangement& b);

/// The tight set of the face, plus the below/above indices whose hyperplane
/// still touches the face closure; indices whose hyperplane misses it drop out.
ActiveTriple valid_active_triple(const Arrangement& arr,
                                 const ArrangementFace& face);

/// Normal equivalence of two parallel translations of a non-multi
/// configuration: equal valid-active-triple sets with the induced sign-label
/// bijection order-preserving. Throws MultiArrangementError on proportional
/// rows.
bool normally_equivalent_translations(const Mat& u, const Vec& a, const Vec& b);

/// Negate rows u_i and offsets a_i for i in the index set.
Arrangement reorient(const Arrangement& arr, const std::vector<int>& s);
/// Row i of the result is row perm[i] of the input.
Arrangement relabel(const Arrangement& arr, const std::vector<int>& perm);

}  // namespace hsl
