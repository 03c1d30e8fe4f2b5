// Covector systems of oriented matroids: axiom verification, the affine
// restriction, equivalence, and equivalence up to reorientation/relabeling.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hsl/poset.hpp"
#include "hsl/signvec.hpp"

namespace hsl {

struct CovectorSystem {
  size_t ground = 0;
  std::set<SignVec> covectors;
};

CovectorSystem make_covector_system(size_t ground,
                                    const std::vector<SignVec>& covectors);

enum class Axiom { Zero, Symmetry, Composition, Elimination };

std::string axiom_str(Axiom a);

struct AxiomViolation {
  Axiom id;
  std::vector<SignVec> witnesses;
};

/// Ok (nullopt) iff the four covector axioms hold; otherwise the first failing
/// axiom in the fixed order zero, symmetry, composition, elimination, with
/// witnesses in lexicographic scan order.
std::optional<AxiomViolation> check_covector_axioms(const CovectorSystem& l);

/// {X restricted to the ground set minus g : X_g = +}. Throws
/// std::invalid_argument when g is a loop (no covector is nonzero at g).
CovectorSystem affine_covectors(const CovectorSystem& l, size_t g);

bool om_equivalent(const CovectorSystem& l1, const CovectorSystem& l2);

struct SymmetryWitness {
  std::vector<int> perm;       // entry i of the image comes from coordinate perm[i]
  std::vector<int> reorient;   // coordinates whose sign is flipped
};

/// Does transforming l1 by (perm, reorient) give exactly l2?
bool is_symmetry_witness(const CovectorSystem& l1, const CovectorSystem& l2,
                         const std::vector<int>& perm,
                         const std::vector<int>& reorient);

CovectorSystem apply_symmetry(const CovectorSystem& l,
                              const std::vector<int>& perm,
                              const std::vector<int>& reorient);

/// Exhaustive search over permutations (lexicographic) and reorientation sets,
/// pruned by per-coordinate sign histograms; first witness in canonical order,
/// or nullopt. allow_reorient=false restricts to relabeling only.
/// Desk scale: ground size <= 8.
std::optional<SymmetryWitness> om_equivalent_up_to_symmetry(
    const CovectorSystem& l1, const CovectorSystem& l2,
    bool allow_reorient = true);

}  // namespace hsl
