#include "hsl/covectors.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace hsl {

CovectorSystem make_covector_system(size_t ground,
                                    const std::vector<SignVec>& covectors) {
  CovectorSystem l;
  l.ground = ground;
  for (const SignVec& x : covectors) {
    if (x.size() != ground)
      throw std::invalid_argument("covector system: length mismatch");
    l.covectors.insert(x);
  }
  return l;
}

std::string axiom_str(Axiom a) {
  switch (a) {
    case Axiom::Zero: return "zero";
    case Axiom::Symmetry: return "symmetry";
    case Axiom::Composition: return "composition";
    case Axiom::Elimination: return "elimination";
  }
  return "?";
}

std::optional<AxiomViolation> check_covector_axioms(const CovectorSystem& l) {
  const auto& cs = l.covectors;
  if (!cs.count(SignVec(l.ground)))
    return AxiomViolation{Axiom::Zero, {}};
  for (const SignVec& x : cs)
    if (!cs.count(x.opposite())) return AxiomViolation{Axiom::Symmetry, {x}};
  for (const SignVec& x : cs)
    for (const SignVec& y : cs)
      if (!cs.count(x.compose(y)))
        return AxiomViolation{Axiom::Composition, {x, y}};
  for (const SignVec& x : cs)
    for (const SignVec& y : cs) {
      std::vector<size_t> sep = x.separation(y);
      if (sep.empty()) continue;
      SignVec xy = x.compose(y);
      std::vector<bool> in_sep(l.ground, false);
      for (size_t e : sep) in_sep[e] = true;
      for (size_t e : sep) {
        bool found = false;
        for (const SignVec& z : cs) {
          if (z[e] != 0) continue;
          bool match = true;
          for (size_t f = 0; f < l.ground && match; ++f)
            if (!in_sep[f] && z[f] != xy[f]) match = false;
          if (match) { found = true; break; }
        }
        if (!found) return AxiomViolation{Axiom::Elimination, {x, y}};
      }
    }
  return std::nullopt;
}

CovectorSystem affine_covectors(const CovectorSystem& l, size_t g) {
  if (g >= l.ground)
    throw std::invalid_argument("affine_covectors: index out of range");
  bool loop = true;
  for (const SignVec& x : l.covectors)
    if (x[g] != 0) { loop = false; break; }
  if (loop) throw std::invalid_argument("affine_covectors: g is a loop");
  std::vector<size_t> keep;
  for (size_t i = 0; i < l.ground; ++i)
    if (i != g) keep.push_back(i);
  CovectorSystem out;
  out.ground = l.ground - 1;
  for (const SignVec& x : l.covectors)
    if (x[g] == 1) out.covectors.insert(x.restrict_to(keep));
  return out;
}

bool om_equivalent(const CovectorSystem& l1, const CovectorSystem& l2) {
  if (l1.ground != l2.ground)
    throw std::invalid_argument("om_equivalent: ground sizes differ");
  return l1.covectors == l2.covectors;
}

CovectorSystem apply_symmetry(const CovectorSystem& l,
                              const std::vector<int>& perm,
                              const std::vector<int>& reorient) {
  if (perm.size() != l.ground)
    throw std::invalid_argument("apply_symmetry: permutation size mismatch");
  std::vector<bool> flip(l.ground, false);
  for (int i : reorient) {
    if (i < 0 || static_cast<size_t>(i) >= l.ground)
      throw std::invalid_argument("apply_symmetry: reorient index bad");
    flip[i] = true;
  }
  CovectorSystem out;
  out.ground = l.ground;
  for (const SignVec& x : l.covectors) {
    SignVec y(l.ground);
    for (size_t i = 0; i < l.ground; ++i) {
      Sign s = x[perm[i]];
      y[i] = flip[i] ? static_cast<Sign>(-s) : s;
    }
    out.covectors.insert(y);
  }
  return out;
}

bool is_symmetry_witness(const CovectorSystem& l1, const CovectorSystem& l2,
                         const std::vector<int>& perm,
                         const std::vector<int>& reorient) {
  return l1.ground == l2.ground &&
         apply_symmetry(l1, perm, reorient).covectors == l2.covectors;
}

namespace {

// Per-coordinate counts of (0, -, +) over a covector set.
using Hist = std::array<size_t, 3>;

std::vector<Hist> histograms(const CovectorSystem& l) {
  std::vector<Hist> h(l.ground, Hist{0, 0, 0});
  for (const SignVec& x : l.covectors)
    for (size_t i = 0; i < l.ground; ++i)
      ++h[i][x[i] == 0 ? 0 : (x[i] < 0 ? 1 : 2)];
  return h;
}

Hist flipped(const Hist& h) { return Hist{h[0], h[2], h[1]}; }

}  // namespace

std::optional<SymmetryWitness> om_equivalent_up_to_symmetry(
    const CovectorSystem& l1, const CovectorSystem& l2, bool allow_reorient) {
  if (l1.ground != l2.ground)
    throw std::invalid_argument("symmetry search: ground sizes differ");
  if (l1.ground > 8) throw DeskScaleExceededError("symmetry search ground");
  if (l1.covectors.size() != l2.covectors.size()) return std::nullopt;
  size_t m = l1.ground;
  std::vector<Hist> h1 = histograms(l1);
  std::vector<Hist> h2 = histograms(l2);

  // flips_ok[i][j]: appending perm[i] = j is viable without / with a flip.
  std::vector<std::vector<std::array<bool, 2>>> ok(
      m, std::vector<std::array<bool, 2>>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      ok[i][j][0] = h2[i] == h1[j];
      ok[i][j][1] = allow_reorient && h2[i] == flipped(h1[j]);
    }

  std::vector<int> perm(m, -1);
  std::vector<bool> used(m, false);
  std::optional<SymmetryWitness> found;

  std::function<bool(size_t)> build = [&](size_t i) -> bool {
    if (i == m) {
      // Flip masks in increasing bitmask order so the empty set comes first;
      // coordinates without the two-way option are forced.
      std::vector<int> free_flip, forced_flip;
      for (size_t k = 0; k < m; ++k) {
        bool can0 = ok[k][perm[k]][0], can1 = ok[k][perm[k]][1];
        if (can0 && can1)
          free_flip.push_back(static_cast<int>(k));
        else if (can1)
          forced_flip.push_back(static_cast<int>(k));
      }
      for (size_t mask = 0; mask < (size_t{1} << free_flip.size()); ++mask) {
        std::vector<int> reor = forced_flip;
        for (size_t b = 0; b < free_flip.size(); ++b)
          if (mask & (size_t{1} << b)) reor.push_back(free_flip[b]);
        std::sort(reor.begin(), reor.end());
        if (is_symmetry_witness(l1, l2, perm, reor)) {
          found = SymmetryWitness{perm, reor};
          return true;
        }
      }
      return false;
    }
    for (size_t j = 0; j < m; ++j) {
      if (used[j] || (!ok[i][j][0] && !ok[i][j][1])) continue;
      perm[i] = static_cast<int>(j);
      used[j] = true;
      if (build(i + 1)) return true;
      used[j] = false;
      perm[i] = -1;
    }
    return false;
  };
  build(0);
  return found;
}

}  // namespace hsl
