// Tetrad polyhedra P(a,I,J,K) = {x : U_I x = a_I, U_J x <= a_J, U_K x >= a_K}
// and their open counterparts: emptiness, interior points, boundedness, faces
// keyed by active triple indices, support values, normal cones and fans.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hsl/feasibility.hpp"
#include "hsl/linalg.hpp"

namespace hsl {

struct EmptyPolyhedronError : std::runtime_error {
  EmptyPolyhedronError() : std::runtime_error("empty polyhedron") {}
};
struct PointNotInPolyhedronError : std::runtime_error {
  PointNotInPolyhedronError() : std::runtime_error("point not in polyhedron") {}
};

/// Offset vector plus an ordered partition (I,J,K) of the row indices of U:
/// equality rows, <=-rows and >=-rows. Indices are 0-based in memory
/// (serialized 1-based).
struct Tetrad {
  Vec a;
  std::vector<int> I, J, K;
};

/// Throws std::invalid_argument unless I,J,K partition {0,...,m-1} and
/// a has length m.
void validate_tetrad(size_t m, const Tetrad& t);

/// The split of [m] at a face: tight rows, strictly-below rows, strictly-above
/// rows. For a face of P(a,I,J,K): I_F contains I, J_F = J \ I_F, K_F = K \ I_F.
struct ActiveTriple {
  std::vector<int> I, J, K;

  friend bool operator==(const ActiveTriple& x, const ActiveTriple& y) {
    return x.I == y.I && x.J == y.J && x.K == y.K;
  }
  friend bool operator<(const ActiveTriple& x, const ActiveTriple& y) {
    if (x.I != y.I) return x.I < y.I;
    if (x.J != y.J) return x.J < y.J;
    return x.K < y.K;
  }
};

/// x ⊆-order on active triples of one polyhedron: smaller face = larger tight set.
inline bool triple_below(const ActiveTriple& f1, const ActiveTriple& f2) {
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  return contains(f1.I, f2.I) && contains(f2.J, f1.J) && contains(f2.K, f1.K);
}

/// Polyhedral cone: positive hull of rays plus the span of lineality
/// generators. Duplicate generators are permitted.
struct Cone {
  size_t dim = 0;
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

struct FaceRecord {
  ActiveTriple active;
  int dimension = 0;
  Vec witness;  // relative-interior point
};

/// The closed system of P(a,I,J,K) as a MixedSystem (EQ/LE/GE rows),
/// and the open system (EQ/LT/GT rows).
MixedSystem tetrad_system(const Mat& u, const Tetrad& t);
MixedSystem tetrad_open_system(const Mat& u, const Tetrad& t);

bool is_empty(const Mat& u, const Tetrad& t);

/// A point of the open polyhedron, or nullopt when it is empty.
std::optional<Vec> open_interior_point(const Mat& u, const Tetrad& t);

/// False iff the recession cone contains a nonzero vector. Requires P nonempty.
bool is_bounded(const Mat& u, const Tetrad& t);

/// Exact sup of <direction, x> over P; nullopt means +infinity.
std::optional<Rat> support_value(const Mat& u, const Tetrad& t,
                                 const Vec& direction);

ActiveTriple active_triple_at(const Mat& u, const Tetrad& t, const Vec& x);

/// All nonempty faces (the improper face P included, the empty face never),
/// sorted by active triple. A face exists for tight set S iff the open system
/// of (a, S, J\S, K\S) is feasible; the search is a pruned DFS over S ⊇ I.
std::vector<FaceRecord> enumerate_faces(const Mat& u, const Tetrad& t);

/// Brute force over all subsets, the test oracle for enumerate_faces.
std::vector<FaceRecord> enumerate_faces_bruteforce(const Mat& u,
                                                   const Tetrad& t);

/// n - rank{u_i : i in I_F}.
int face_dimension(const Mat& u, const ActiveTriple& active);

/// pos{u_j : j in I_F∩J} + pos{-u_k : k in I_F∩K} + span{u_i : i in I}.
Cone normal_cone(const Mat& u, const Tetrad& t, const ActiveTriple& active);

bool cone_contains(const Cone& c, const Vec& v);
bool cone_subset(const Cone& inner, const Cone& outer);
bool cone_equal(const Cone& c1, const Cone& c2);

std::vector<Cone> normal_fan(const Mat& u, const Tetrad& t);

/// Fans compared as sets of cones under mutual generator containment.
/// Requires both polyhedra nonempty.
bool normal_fan_equal(const Mat& u, const Tetrad& t1, const Tetrad& t2);

/// Is P(a1,...) a subset of P(a2,...)? Decided by checking that each
/// constraint of the second system cannot be strictly violated inside the
/// first. Both tetrads must partition the same [m].
bool polyhedron_subset(const Mat& u, const Tetrad& sub, const Tetrad& super);
bool polyhedron_point_set_equal(const Mat& u, const Tetrad& t1,
                                const Tetrad& t2);

}  // namespace hsl
