#include "hsl/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hsl/covectors.hpp"
#include "hsl/json_io.hpp"

namespace hsl {

Vec sample_vec(Rng& rng, size_t n) {
  Vec v(n);
  for (Rat& x : v) x = rng.small_rat();
  return v;
}

Vec sample_nonzero_vec(Rng& rng, size_t n) {
  for (;;) {
    Vec v = sample_vec(rng, n);
    if (!is_zero(v)) return v;
  }
}

Mat sample_matrix(Rng& rng, size_t m, size_t n) {
  std::vector<Vec> rows;
  for (size_t i = 0; i < m; ++i) rows.push_back(sample_nonzero_vec(rng, n));
  return Mat::from_rows(rows, n);
}

void sample_partition(Rng& rng, size_t m, std::vector<int>& i,
                      std::vector<int>& j, std::vector<int>& k) {
  i.clear();
  j.clear();
  k.clear();
  for (size_t idx = 0; idx < m; ++idx) {
    switch (rng.below(3)) {
      case 0: i.push_back(static_cast<int>(idx)); break;
      case 1: j.push_back(static_cast<int>(idx)); break;
      default: k.push_back(static_cast<int>(idx)); break;
    }
  }
}

Vec same_face_partner(Rng& rng, const Mat& u, const Vec& a) {
  Rat lambda(rng.range(1, 6), rng.range(1, 3));
  Vec w = sample_vec(rng, u.cols);
  Vec b(u.rows);
  for (size_t i = 0; i < u.rows; ++i)
    b[i] = lambda * a[i] + dot(u.row(i), w);
  return b;
}

Mat example_config() {
  return Mat::from_rows({{Rat(-1), Rat(0)},
                         {Rat(0), Rat(1)},
                         {Rat(0), Rat(-1)},
                         {Rat(1), Rat(1)}},
                        2);
}

namespace {

std::string dump(const Mat& u, const Vec& a, const Vec& b) {
  std::ostringstream os;
  os << "U=" << mat_to_json(u).dump() << " a=" << vec_to_json(a).dump()
     << " b=" << vec_to_json(b).dump();
  return os.str();
}

struct Instance {
  Mat u;
  Vec a;
  Vec b;
  bool same_face;  // b was constructed inside the open face of a
};

Instance sample_instance(Rng& rng) {
  size_t n = 1 + rng.below(3);
  size_t m = 1 + rng.below(5);
  Instance inst;
  inst.u = sample_matrix(rng, m, n);
  inst.a = sample_vec(rng, m);
  inst.same_face = rng.below(2) == 0;
  inst.b = inst.same_face ? same_face_partner(rng, inst.u, inst.a)
                          : sample_vec(rng, m);
  return inst;
}

MixedSystem sample_mixed_system(Rng& rng) {
  MixedSystem sys;
  sys.n = 1 + rng.below(3);
  size_t rows = rng.below(7);
  for (size_t r = 0; r < rows; ++r) {
    Vec normal = rng.below(10) == 0 ? Vec(sys.n) : sample_vec(rng, sys.n);
    Rel rel = static_cast<Rel>(rng.below(5));
    sys.add(std::move(normal), rel, rng.small_rat());
  }
  return sys;
}

}  // namespace

VerifyResult verify_dichotomy(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t, ++res.trials) {
    MixedSystem sys = sample_mixed_system(rng);
    DecideResult r = decide(sys);
    if (r.feasible()) {
      if (!satisfies(sys, *r.witness))
        res.fail("witness does not satisfy the system: " +
                 mixed_system_to_json(sys).dump());
    } else {
      if (!certificate_valid(sys, *r.cert))
        res.fail("certificate invariants fail: " +
                 mixed_system_to_json(sys).dump());
    }
    // Positive row scaling must not change the outcome kind.
    MixedSystem scaled = sys;
    for (LinCon& row : scaled.rows) {
      Rat f(rng.range(1, 4), rng.range(1, 3));
      for (Rat& x : row.normal) x *= f;
      row.rhs *= f;
    }
    if (decide(scaled).feasible() != r.feasible())
      res.fail("row scaling changed the decision: " +
               mixed_system_to_json(sys).dump());
  }
  return res;
}

namespace {

struct SignFlags {
  bool face;
  bool translate;
  bool cone;
  bool lift;
};

SignFlags sign_flags(const Instance& inst) {
  SignFlags f{};
  f.face = same_open_face(inst.u, inst.a, inst.b);
  f.translate = sign_equivalent(parallel_translation(inst.u, inst.a),
                                parallel_translation(inst.u, inst.b));
  f.cone = sign_equivalent(coning(inst.u, inst.a).cone,
                           coning(inst.u, inst.b).cone);
  f.lift = sign_equivalent(elementary_lift(inst.u, inst.a).lift,
                           elementary_lift(inst.u, inst.b).lift);
  return f;
}

std::string flag_dump(const SignFlags& f, const Instance& inst) {
  return "(face=" + std::to_string(f.face) +
         " translate=" + std::to_string(f.translate) +
         " cone=" + std::to_string(f.cone) +
         " lift=" + std::to_string(f.lift) + ") " +
         dump(inst.u, inst.a, inst.b);
}

}  // namespace

VerifyResult verify_translation_sign(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t, ++res.trials) {
    Instance inst = sample_instance(rng);
    SignFlags f = sign_flags(inst);
    if (inst.same_face && !f.face) {
      res.fail("constructed same-face pair not located together: " +
               dump(inst.u, inst.a, inst.b));
      break;
    }
    if (f.translate != f.face || f.cone != f.face || f.lift != f.face) {
      std::string note;
      if (f.lift && !f.face && f.translate == f.face && f.cone == f.face)
        note = "; only the lift converse fails: lift sign sets are invariant "
               "under negating the offset vector, so they cannot separate "
               "every pair of open faces";
      res.fail("four-way equivalence violated " + flag_dump(f, inst) + note);
    }
  }
  return res;
}

VerifyResult verify_translation_sign_provable(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t, ++res.trials) {
    Instance inst = sample_instance(rng);
    SignFlags f = sign_flags(inst);
    if (inst.same_face && !f.face) {
      res.fail("constructed same-face pair not located together: " +
               dump(inst.u, inst.a, inst.b));
      break;
    }
    if (f.translate != f.face)
      res.fail("translation signs disagree with the open face " +
               flag_dump(f, inst));
    if (f.cone != f.face)
      res.fail("coning signs disagree with the open face " +
               flag_dump(f, inst));
    if (f.face && !f.lift)
      res.fail("shared open face without lift sign equivalence " +
               flag_dump(f, inst));
  }
  return res;
}

VerifyResult verify_lift_negation_invariance(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t, ++res.trials) {
    size_t n = 1 + rng.below(3);
    size_t m = 1 + rng.below(5);
    Mat u = sample_matrix(rng, m, n);
    Vec a = sample_vec(rng, m);
    Vec neg(m);
    for (size_t i = 0; i < m; ++i) neg[i] = -a[i];
    if (!sign_equivalent(elementary_lift(u, a).lift,
                         elementary_lift(u, neg).lift))
      res.fail("lift sign sets of a and -a differ: " + dump(u, a, neg));
  }
  return res;
}

namespace {

std::vector<ActiveTriple> active_triples(const std::vector<FaceRecord>& faces) {
  std::vector<ActiveTriple> out;
  for (const FaceRecord& f : faces) out.push_back(f.active);
  return out;
}

struct TetradPair {
  Mat u;
  Tetrad ta;
  Tetrad tb;
};

TetradPair sample_same_face_tetrads(Rng& rng) {
  size_t n = 1 + rng.below(3);
  size_t m = 1 + rng.below(5);
  TetradPair p;
  p.u = sample_matrix(rng, m, n);
  Vec a = sample_vec(rng, m);
  Vec b = same_face_partner(rng, p.u, a);
  sample_partition(rng, m, p.ta.I, p.ta.J, p.ta.K);
  p.ta.a = a;
  p.tb = p.ta;
  p.tb.a = b;
  return p;
}

}  // namespace

VerifyResult verify_face_transport(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t, ++res.trials) {
    TetradPair p = sample_same_face_tetrads(rng);
    bool empty_a = is_empty(p.u, p.ta);
    bool empty_b = is_empty(p.u, p.tb);
    if (empty_a != empty_b) {
      res.fail("emptiness not transported: " + dump(p.u, p.ta.a, p.tb.a));
      break;
    }
    if (empty_a) continue;
    auto fa = enumerate_faces(p.u, p.ta);
    auto fb = enumerate_faces(p.u, p.tb);
    if (active_triples(fa) != active_triples(fb)) {
      res.fail("active triple sets differ: " + dump(p.u, p.ta.a, p.tb.a));
      break;
    }
    if (!normal_fan_equal(p.u, p.ta, p.tb))
      res.fail("normal fans differ: " + dump(p.u, p.ta.a, p.tb.a));
  }
  return res;
}

VerifyResult verify_boundedness(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t, ++res.trials) {
    TetradPair p = sample_same_face_tetrads(rng);
    if (is_empty(p.u, p.ta)) {
      if (!is_empty(p.u, p.tb))
        res.fail("emptiness not transported: " + dump(p.u, p.ta.a, p.tb.a));
      continue;
    }
    bool ba = is_bounded(p.u, p.ta);
    if (ba != is_bounded(p.u, p.tb)) {
      res.fail("boundedness differs inside one open face: " +
               dump(p.u, p.ta.a, p.tb.a));
      break;
    }
    // Sweep inside the solvability cone C(I,J,K): relax J up / K down and
    // translate by row-space vectors; the flag must stay put.
    std::set<int> in_j(p.ta.J.begin(), p.ta.J.end());
    std::set<int> in_k(p.ta.K.begin(), p.ta.K.end());
    for (int s = 0; s < 10 && res.ok; ++s) {
      Vec c = p.ta.a;
      Vec w = sample_vec(rng, p.u.cols);
      for (size_t i = 0; i < p.u.rows; ++i) {
        Rat relax(rng.range(0, 3), rng.range(1, 3));
        if (in_j.count(static_cast<int>(i))) c[i] += relax;
        if (in_k.count(static_cast<int>(i))) c[i] -= relax;
        c[i] += dot(p.u.row(i), w);
      }
      Tetrad tc = p.ta;
      tc.a = c;
      if (is_empty(p.u, tc)) {
        res.fail("sweep point left the solvability cone: " +
                 dump(p.u, p.ta.a, c));
        break;
      }
      if (is_bounded(p.u, tc) != ba)
        res.fail("boundedness changed along the cone sweep: " +
                 dump(p.u, p.ta.a, c));
    }
  }
  return res;
}

VerifyResult verify_deformation_posets(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t, ++res.trials) {
    size_t n = 1 + rng.below(3);
    size_t m = 1 + rng.below(5);
    Mat u = sample_matrix(rng, m, n);
    Vec a = sample_vec(rng, m);
    Vec b = same_face_partner(rng, u, a);
    Arrangement ta = parallel_translation(u, a);
    Arrangement tb = parallel_translation(u, b);
    if (!combinatorially_equivalent(ta, tb))
      res.fail("translations not combinatorially equivalent: " + dump(u, a, b));
    if (!combinatorially_equivalent(coning(u, a).cone, coning(u, b).cone))
      res.fail("conings not combinatorially equivalent: " + dump(u, a, b));
    if (!combinatorially_equivalent(elementary_lift(u, a).lift,
                                    elementary_lift(u, b).lift))
      res.fail("lifts not combinatorially equivalent: " + dump(u, a, b));
    if (!is_multi(u) && !normally_equivalent_translations(u, a, b))
      res.fail("translations not normally equivalent: " + dump(u, a, b));
  }
  return res;
}

VerifyResult verify_reorientation_example() {
  VerifyResult res;
  res.trials = 1;
  Mat ua = Mat::from_rows(
      {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}}, 2);
  Vec aa{Rat(0), Rat(0), Rat(2)};
  Mat ub = Mat::from_rows(
      {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(-1), Rat(-1)}}, 2);
  Vec ab{Rat(0), Rat(0), Rat(-2)};
  std::vector<SignVec> sa = sign_set(make_arrangement(ua, aa));
  std::vector<SignVec> sb = sign_set(make_arrangement(ub, ab));
  if (sa == sb) {
    res.fail("the two arrangements should not be sign equivalent");
    return res;
  }
  CovectorSystem la = make_covector_system(3, sa);
  CovectorSystem lb = make_covector_system(3, sb);
  auto witness = om_equivalent_up_to_symmetry(la, lb);
  if (!witness) {
    res.fail("no reorientation/relabeling witness found");
    return res;
  }
  if (!is_symmetry_witness(la, lb, witness->perm, witness->reorient)) {
    res.fail("returned witness does not verify");
    return res;
  }
  // The transposition-with-flip witness must itself verify.
  if (!is_symmetry_witness(la, lb, {1, 0, 2}, {2}))
    res.fail("swap(1,2) with reorientation {3} is not a witness");
  return res;
}

VerifyResult verify_fixed_points(const Mat& u, int union_samples,
                                 uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  // Translation and coning sign sets both separate open faces, so the fixed
  // point characterization holds for either operator pair. Lift sign sets do
  // not (they are invariant under negating the offset), so the lift variant
  // is exercised only by its pinned counterexample test.
  for (DeformKind kind : {DeformKind::Translate, DeformKind::Cone}) {
    DerivedContext ctx(u, kind);
    const auto& faces = ctx.faces();
    for (const DerivedFaceRef& f : faces) {
      ++res.trials;
      FaceSubset single;
      single.faces.insert(f.sign);
      if (!ctx.fixed_point_check(single)) {
        res.fail("open face is not a fixed point: " + f.sign.str());
        return res;
      }
    }
    if (faces.size() < 2) continue;
    for (int s = 0; s < union_samples; ++s) {
      ++res.trials;
      size_t want = 2 + rng.below(faces.size() - 1);
      std::set<size_t> picked;
      while (picked.size() < want) picked.insert(rng.below(faces.size()));
      FaceSubset subset;
      for (size_t i : picked) subset.faces.insert(faces[i].sign);
      if (ctx.fixed_point_check(subset)) {
        res.fail("multi-face union passed the fixed point check");
        return res;
      }
    }
    if (kind != DeformKind::Translate) continue;
    // Pairwise sign-set incomparability across distinct open faces.
    for (size_t i = 0; i < faces.size(); ++i)
      for (size_t j = 0; j < faces.size(); ++j) {
        if (i == j) continue;
        const auto& si = ctx.signs_of_face(faces[i].sign);
        const auto& sj = ctx.signs_of_face(faces[j].sign);
        if (std::includes(sj.begin(), sj.end(), si.begin(), si.end())) {
          res.fail("sign set of one open face contains another: " +
                   faces[i].sign.str() + " vs " + faces[j].sign.str());
          return res;
        }
      }
  }
  return res;
}

namespace {

VerifyResult check_central_system(VerifyResult res, const Arrangement& arr) {
  CovectorSystem l = make_covector_system(arr.m(), sign_set(arr));
  if (auto bad = check_covector_axioms(l))
    res.fail("axiom violation (" + axiom_str(bad->id) +
             ") on an arrangement sign set");
  ++res.trials;
  return res;
}

}  // namespace

VerifyResult verify_axioms(const Mat& u) {
  VerifyResult res;
  res = check_central_system(std::move(res), derived_arrangement(u));
  for (const DerivedFaceRef& f : enumerate_derived_faces(u)) {
    Arrangement cone = coning(u, f.rep).cone;
    res = check_central_system(std::move(res), cone);
    res = check_central_system(std::move(res),
                               elementary_lift(u, f.rep).lift);
    if (!res.ok) return res;
    // The affine restriction at K0 must be the base sign set.
    CovectorSystem lc = make_covector_system(cone.m(), sign_set(cone));
    CovectorSystem affine = affine_covectors(lc, cone.m() - 1);
    std::vector<SignVec> base = sign_set(parallel_translation(u, f.rep));
    if (std::set<SignVec>(base.begin(), base.end()) != affine.covectors) {
      res.fail("affine restriction differs from the base sign set at " +
               f.sign.str());
      return res;
    }
  }

  // Mutations with pinned violation ids, on the first coning.
  std::vector<DerivedFaceRef> faces = enumerate_derived_faces(u);
  Arrangement cone = coning(u, faces.front().rep).cone;
  CovectorSystem l = make_covector_system(cone.m(), sign_set(cone));

  CovectorSystem no_zero = l;
  no_zero.covectors.erase(SignVec(l.ground));
  auto v1 = check_covector_axioms(no_zero);
  if (!v1 || v1->id != Axiom::Zero)
    res.fail("dropping the zero covector should violate the zero axiom");

  CovectorSystem no_opposite = l;
  for (const SignVec& x : l.covectors)
    if (!x.is_zero()) { no_opposite.covectors.erase(x.opposite()); break; }
  auto v2 = check_covector_axioms(no_opposite);
  if (!v2 || v2->id != Axiom::Symmetry)
    res.fail("dropping an opposite should violate the symmetry axiom");

  CovectorSystem no_comp = l;
  bool mutated = false;
  for (const SignVec& x : l.covectors) {
    if (mutated) break;
    for (const SignVec& y : l.covectors) {
      SignVec z = x.compose(y);
      if (z == x || z == y || z == x.opposite() || z == y.opposite() ||
          z.is_zero())
        continue;
      no_comp.covectors.erase(z);
      no_comp.covectors.erase(z.opposite());
      mutated = true;
      break;
    }
  }
  if (mutated) {
    auto v3 = check_covector_axioms(no_comp);
    if (!v3 || v3->id != Axiom::Composition)
      res.fail("dropping a composition should violate the composition axiom");
  }
  res.trials += 3;
  return res;
}

namespace {

// sign => combinatorial => semilattice; test both implications without
// computing the expensive middle term when nothing depends on it.
void check_chain_pair(VerifyResult& res, const Arrangement& x,
                      const Arrangement& y, const std::string& what) {
  bool sign_eq = x.m() == y.m() && sign_equivalent(x, y);
  bool semi = semilattice_equivalent(x, y);
  if (sign_eq || !semi) {
    bool comb = combinatorially_equivalent(x, y);
    if (sign_eq && !comb)
      res.fail("sign equivalent but not combinatorially equivalent: " + what);
    if (comb && !semi)
      res.fail("combinatorially but not semilattice equivalent: " + what);
  }
  ++res.trials;
}

void chain_on_offsets(VerifyResult& res, const Mat& u, const Vec& a,
                      const Vec& b) {
  std::string what = dump(u, a, b);
  check_chain_pair(res, parallel_translation(u, a), parallel_translation(u, b),
                   what);
  if (!res.ok) return;
  check_chain_pair(res, coning(u, a).cone, coning(u, b).cone, what);
  if (!res.ok) return;
  check_chain_pair(res, elementary_lift(u, a).lift, elementary_lift(u, b).lift,
                   what);
}

}  // namespace

VerifyResult verify_chain(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t) {
    Instance inst = sample_instance(rng);
    chain_on_offsets(res, inst.u, inst.a, inst.b);
  }
  return res;
}

VerifyResult verify_chain_same_face(int trials, uint64_t seed) {
  // Replays the face-transport sampler, so the chain runs over exactly the
  // arrangement pairs that suite generates.
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t) {
    TetradPair p = sample_same_face_tetrads(rng);
    chain_on_offsets(res, p.u, p.ta.a, p.tb.a);
  }
  return res;
}

VerifyResult verify_normal_vs_sign(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t, ++res.trials) {
    // Resample the shape too: with n = 1 every multi-row configuration is
    // proportional, so a fixed shape could never become multi-free.
    size_t n, m;
    Mat u;
    do {
      n = 1 + rng.below(3);
      m = 1 + rng.below(5);
      u = sample_matrix(rng, m, n);
    } while (is_multi(u));
    Vec a = sample_vec(rng, m);
    Vec b = rng.below(2) == 0 ? same_face_partner(rng, u, a)
                              : sample_vec(rng, m);
    bool normal = normally_equivalent_translations(u, a, b);
    bool sign = sign_equivalent(parallel_translation(u, a),
                                parallel_translation(u, b));
    if (normal != sign)
      res.fail("normal/sign equivalence disagree (normal=" +
               std::to_string(normal) + " sign=" + std::to_string(sign) +
               ") " + dump(u, a, b));
  }
  return res;
}

VerifyResult verify_face_counts(int trials, uint64_t seed) {
  Rng rng(seed);
  VerifyResult res;
  for (int t = 0; t < trials && res.ok; ++t, ++res.trials) {
    // Proportional-normal family: the regime where the identities are sound.
    size_t n = 1 + rng.below(2);
    size_t m = 2 + rng.below(4);
    Vec base = sample_nonzero_vec(rng, n);
    std::vector<Vec> rows;
    for (size_t i = 0; i < m; ++i) {
      Vec row(n);
      Rat f = rng.small_nonzero_rat();
      for (size_t c = 0; c < n; ++c) row[c] = f * base[c];
      rows.push_back(std::move(row));
    }
    Mat u = Mat::from_rows(rows, n);
    Vec a = sample_vec(rng, m);
    for (int retry = 0; retry < 50 && distinct_hyperplane_count(u, a) < 2;
         ++retry)
      a = sample_vec(rng, m);
    if (distinct_hyperplane_count(u, a) < 2) continue;
    FaceCountReport rep = face_count_report(u, a);
    if (!rep.hypothesis_met || !rep.identities_hold || !*rep.identities_hold) {
      res.fail("face count identities fail: " + dump(u, a, a));
      break;
    }
    // Transport maps must agree with the geometric sign sets.
    std::vector<SignVec> transported =
        transport_sign_coning(u, sign_set(parallel_translation(u, a)));
    if (transported != sign_set(coning(u, a).cone)) {
      res.fail("coning transport differs from geometry: " + dump(u, a, a));
      break;
    }
    if (transport_sign_lift(transported) !=
        sign_set(elementary_lift(u, a).lift))
      res.fail("lift transport differs from geometry: " + dump(u, a, a));
  }
  return res;
}

}  // namespace hsl
