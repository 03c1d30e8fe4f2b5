// Circuits of the direction configuration, canonical circuit vectors, the
// derived arrangement in offset space R^m, and point location into its open
// faces.
#pragma once

#include <vector>

#include "hsl/arrangement.hpp"
#include "hsl/linalg.hpp"
#include "hsl/signvec.hpp"

namespace hsl {

/// A minimal linearly dependent row subset with its canonical dependence
/// vector: coprime integer entries, first nonzero entry positive, support
/// exactly the circuit.
struct Circuit {
  std::vector<int> support;
  Vec vector;  // length m
};

/// All circuits, each once, sorted by (size, lexicographic support).
/// Subset search by increasing size; supersets of found circuits are skipped,
/// so any dependent survivor is minimal.
std::vector<Circuit> enumerate_circuits(const Mat& u);

/// The central arrangement in R^m whose rows are the canonical circuit
/// vectors, in enumerate_circuits order. No circuits gives the empty
/// arrangement (every point of R^m is the unique open face).
Arrangement derived_arrangement(const Mat& u);

/// Entry per circuit: the exact sign of <c^C, a>.
SignVec locate_open_face(const Mat& u, const Vec& a);

bool same_open_face(const Mat& u, const Vec& a, const Vec& b);

/// Dimension of the open derived face containing a.
int derived_face_dimension(const Mat& u, const Vec& a);

struct DerivedFaceRef {
  SignVec sign;  // over the circuit list
  Vec rep;       // exact rational relative-interior point in R^m
};

/// One entry per open face of the derived arrangement, sorted by sign.
/// Throws DeskScaleExceededError when the circuit count exceeds the guard.
std::vector<DerivedFaceRef> enumerate_derived_faces(const Mat& u,
                                                    size_t max_circuits = 12);

}  // namespace hsl
