#include "hsl/polyhedron.hpp"

#include <algorithm>
#include <set>

namespace hsl {

void validate_tetrad(size_t m, const Tetrad& t) {
  if (t.a.size() != m)
    throw std::invalid_argument("tetrad: offset length != row count");
  std::vector<int> seen(m, 0);
  auto mark = [&](const std::vector<int>& part) {
    for (int i : part) {
      if (i < 0 || static_cast<size_t>(i) >= m)
        throw std::invalid_argument("tetrad: index out of range");
      ++seen[i];
    }
  };
  mark(t.I);
  mark(t.J);
  mark(t.K);
  for (size_t i = 0; i < m; ++i)
    if (seen[i] != 1)
      throw std::invalid_argument("tetrad: I,J,K must partition [m]");
}

MixedSystem tetrad_system(const Mat& u, const Tetrad& t) {
  validate_tetrad(u.rows, t);
  MixedSystem sys;
  sys.n = u.cols;
  for (int i : t.I) sys.add(u.row(i), Rel::EQ, t.a[i]);
  for (int j : t.J) sys.add(u.row(j), Rel::LE, t.a[j]);
  for (int k : t.K) sys.add(u.row(k), Rel::GE, t.a[k]);
  return sys;
}

MixedSystem tetrad_open_system(const Mat& u, const Tetrad& t) {
  validate_tetrad(u.rows, t);
  MixedSystem sys;
  sys.n = u.cols;
  for (int i : t.I) sys.add(u.row(i), Rel::EQ, t.a[i]);
  for (int j : t.J) sys.add(u.row(j), Rel::LT, t.a[j]);
  for (int k : t.K) sys.add(u.row(k), Rel::GT, t.a[k]);
  return sys;
}

bool is_empty(const Mat& u, const Tetrad& t) {
  return !decide(tetrad_system(u, t)).feasible();
}

std::optional<Vec> open_interior_point(const Mat& u, const Tetrad& t) {
  DecideResult r = decide(tetrad_open_system(u, t));
  if (!r.feasible()) return std::nullopt;
  return r.witness;
}

namespace {

// Recession cone rows: U_I v = 0, U_J v <= 0, U_K v >= 0.
MixedSystem recession_system(const Mat& u, const Tetrad& t) {
  MixedSystem sys;
  sys.n = u.cols;
  for (int i : t.I) sys.add(u.row(i), Rel::EQ, Rat(0));
  for (int j : t.J) sys.add(u.row(j), Rel::LE, Rat(0));
  for (int k : t.K) sys.add(u.row(k), Rel::GE, Rat(0));
  return sys;
}

Vec unit(size_t n, size_t j, int sign = 1) {
  Vec e(n);
  e[j] = Rat(sign);
  return e;
}

}  // namespace

bool is_bounded(const Mat& u, const Tetrad& t) {
  if (is_empty(u, t)) throw EmptyPolyhedronError();
  // Optimize each coordinate over the recession cone clipped to [-1,1]^n;
  // the cone is nonzero iff some optimum is.
  MixedSystem sys = recession_system(u, t);
  for (size_t j = 0; j < u.cols; ++j) {
    sys.add(unit(u.cols, j), Rel::LE, Rat(1));
    sys.add(unit(u.cols, j), Rel::GE, Rat(-1));
  }
  for (size_t j = 0; j < u.cols; ++j) {
    for (int dir : {+1, -1}) {
      LpOutcome out = optimize(unit(u.cols, j, dir), sys);
      if (out.kind != LpOutcome::Kind::Optimal)
        throw std::logic_error("is_bounded: box LP must be optimal");
      if (!out.value.is_zero()) return false;
    }
  }
  return true;
}

std::optional<Rat> support_value(const Mat& u, const Tetrad& t,
                                 const Vec& direction) {
  if (direction.size() != u.cols)
    throw std::invalid_argument("support_value: direction length mismatch");
  if (is_empty(u, t)) throw EmptyPolyhedronError();
  LpOutcome out = optimize(direction, tetrad_system(u, t));
  if (out.kind == LpOutcome::Kind::Unbounded) return std::nullopt;
  if (out.kind != LpOutcome::Kind::Optimal)
    throw std::logic_error("support_value: unexpected LP outcome");
  return out.value;
}

ActiveTriple active_triple_at(const Mat& u, const Tetrad& t, const Vec& x) {
  if (!satisfies(tetrad_system(u, t), x)) throw PointNotInPolyhedronError();
  ActiveTriple triple;
  std::set<int> tight;
  for (size_t i = 0; i < u.rows; ++i)
    if (dot(u.row(i), x) == t.a[i]) tight.insert(static_cast<int>(i));
  triple.I.assign(tight.begin(), tight.end());
  for (int j : t.J)
    if (!tight.count(j)) triple.J.push_back(j);
  for (int k : t.K)
    if (!tight.count(k)) triple.K.push_back(k);
  std::sort(triple.J.begin(), triple.J.end());
  std::sort(triple.K.begin(), triple.K.end());
  return triple;
}

namespace {

ActiveTriple triple_from_tight(const Tetrad& t, const std::vector<int>& tight) {
  ActiveTriple triple;
  triple.I = tight;
  std::sort(triple.I.begin(), triple.I.end());
  for (int j : t.J)
    if (!std::binary_search(triple.I.begin(), triple.I.end(), j))
      triple.J.push_back(j);
  for (int k : t.K)
    if (!std::binary_search(triple.I.begin(), triple.I.end(), k))
      triple.K.push_back(k);
  std::sort(triple.J.begin(), triple.J.end());
  std::sort(triple.K.begin(), triple.K.end());
  return triple;
}

std::optional<FaceRecord> try_face(const Mat& u, const Tetrad& t,
                                   const std::vector<int>& tight) {
  ActiveTriple triple = triple_from_tight(t, tight);
  Tetrad sub{t.a, triple.I, triple.J, triple.K};
  auto witness = open_interior_point(u, sub);
  if (!witness) return std::nullopt;
  int dim = face_dimension(u, triple);
  return FaceRecord{std::move(triple), dim, std::move(*witness)};
}

// DFS over candidate tight sets S ⊇ I, one undecided index at a time. A
// branch dies as soon as the partial system (equalities on the tight picks,
// strict rows on the loose picks, weak rows on the rest) is infeasible.
void face_dfs(const Mat& u, const Tetrad& t, const std::vector<int>& pending,
              size_t k, MixedSystem& partial, std::vector<int>& tight,
              std::vector<FaceRecord>& out) {
  if (k == pending.size()) {
    if (auto rec = try_face(u, t, tight)) out.push_back(std::move(*rec));
    return;
  }
  int idx = pending[k];
  bool below = std::binary_search(t.J.begin(), t.J.end(), idx);
  for (int choice = 0; choice < 2; ++choice) {
    Rel rel = choice == 0 ? Rel::EQ : (below ? Rel::LT : Rel::GT);
    partial.rows.push_back(LinCon{u.row(idx), t.a[idx], rel});
    if (decide(partial).feasible()) {
      if (choice == 0) tight.push_back(idx);
      face_dfs(u, t, pending, k + 1, partial, tight, out);
      if (choice == 0) tight.pop_back();
    }
    partial.rows.pop_back();
  }
}

}  // namespace

std::vector<FaceRecord> enumerate_faces(const Mat& u, const Tetrad& t) {
  validate_tetrad(u.rows, t);
  std::vector<FaceRecord> out;
  // Base system: I-equalities plus weak rows for every undecided index, so
  // each branch stays inside P. The DFS appends its decided rows on top; the
  // weak duplicates they shadow are harmless.
  MixedSystem partial;
  partial.n = u.cols;
  for (int i : t.I) partial.add(u.row(i), Rel::EQ, t.a[i]);
  std::vector<int> pending;
  for (int j : t.J) pending.push_back(j);
  for (int k : t.K) pending.push_back(k);
  std::sort(pending.begin(), pending.end());
  for (int j : t.J) partial.add(u.row(j), Rel::LE, t.a[j]);
  for (int k : t.K) partial.add(u.row(k), Rel::GE, t.a[k]);
  std::vector<int> tight(t.I.begin(), t.I.end());
  if (!decide(partial).feasible()) return out;  // empty polyhedron
  face_dfs(u, t, pending, 0, partial, tight, out);
  std::sort(out.begin(), out.end(),
            [](const FaceRecord& x, const FaceRecord& y) {
              return x.active < y.active;
            });
  return out;
}

std::vector<FaceRecord> enumerate_faces_bruteforce(const Mat& u,
                                                   const Tetrad& t) {
  validate_tetrad(u.rows, t);
  std::vector<int> pending;
  for (int j : t.J) pending.push_back(j);
  for (int k : t.K) pending.push_back(k);
  std::sort(pending.begin(), pending.end());
  std::vector<FaceRecord> out;
  for (size_t mask = 0; mask < (size_t{1} << pending.size()); ++mask) {
    std::vector<int> tight(t.I.begin(), t.I.end());
    for (size_t b = 0; b < pending.size(); ++b)
      if (mask & (size_t{1} << b)) tight.push_back(pending[b]);
    if (auto rec = try_face(u, t, tight)) out.push_back(std::move(*rec));
  }
  std::sort(out.begin(), out.end(),
            [](const FaceRecord& x, const FaceRecord& y) {
              return x.active < y.active;
            });
  return out;
}

int face_dimension(const Mat& u, const ActiveTriple& active) {
  return static_cast<int>(u.cols) -
         static_cast<int>(rank(u.select_rows(active.I)));
}

Cone normal_cone(const Mat& u, const Tetrad& t, const ActiveTriple& active) {
  Cone cone;
  cone.dim = u.cols;
  std::set<int> in_j(t.J.begin(), t.J.end());
  std::set<int> in_k(t.K.begin(), t.K.end());
  for (int i : active.I) {
    if (in_j.count(i)) cone.rays.push_back(u.row(i));
    if (in_k.count(i)) {
      Vec neg = u.row(i);
      for (Rat& x : neg) x = -x;
      cone.rays.push_back(std::move(neg));
    }
  }
  for (int i : t.I) cone.lineality.push_back(u.row(i));
  return cone;
}

bool cone_contains(const Cone& c, const Vec& v) {
  if (v.size() != c.dim)
    throw std::invalid_argument("cone_contains: dimension mismatch");
  // v = sum lambda_i ray_i + sum mu_j lin_j, lambda >= 0, mu free.
  size_t k = c.rays.size() + c.lineality.size();
  MixedSystem sys;
  sys.n = k;
  for (size_t coord = 0; coord < c.dim; ++coord) {
    Vec row(k);
    for (size_t i = 0; i < c.rays.size(); ++i) row[i] = c.rays[i][coord];
    for (size_t j = 0; j < c.lineality.size(); ++j)
      row[c.rays.size() + j] = c.lineality[j][coord];
    sys.add(std::move(row), Rel::EQ, v[coord]);
  }
  for (size_t i = 0; i < c.rays.size(); ++i) {
    Vec row(k);
    row[i] = Rat(1);
    sys.add(std::move(row), Rel::GE, Rat(0));
  }
  return decide(sys).feasible();
}

bool cone_subset(const Cone& inner, const Cone& outer) {
  for (const Vec& r : inner.rays)
    if (!cone_contains(outer, r)) return false;
  for (const Vec& l : inner.lineality) {
    if (!cone_contains(outer, l)) return false;
    Vec neg = l;
    for (Rat& x : neg) x = -x;
    if (!cone_contains(outer, neg)) return false;
  }
  return true;
}

bool cone_equal(const Cone& c1, const Cone& c2) {
  return cone_subset(c1, c2) && cone_subset(c2, c1);
}

std::vector<Cone> normal_fan(const Mat& u, const Tetrad& t) {
  std::vector<Cone> fan;
  for (const FaceRecord& f : enumerate_faces(u, t))
    fan.push_back(normal_cone(u, t, f.active));
  return fan;
}

bool normal_fan_equal(const Mat& u, const Tetrad& t1, const Tetrad& t2) {
  if (is_empty(u, t1) || is_empty(u, t2)) throw EmptyPolyhedronError();
  std::vector<Cone> f1 = normal_fan(u, t1);
  std::vector<Cone> f2 = normal_fan(u, t2);
  auto covered = [](const std::vector<Cone>& xs, const std::vector<Cone>& ys) {
    for (const Cone& x : xs) {
      bool found = false;
      for (const Cone& y : ys)
        if (cone_equal(x, y)) { found = true; break; }
      if (!found) return false;
    }
    return true;
  };
  return covered(f1, f2) && covered(f2, f1);
}

bool polyhedron_subset(const Mat& u, const Tetrad& sub, const Tetrad& super) {
  validate_tetrad(u.rows, sub);
  validate_tetrad(u.rows, super);
  MixedSystem base = tetrad_system(u, sub);
  auto violated = [&](const Vec& normal, Rel strict_rel, const Rat& rhs) {
    MixedSystem sys = base;
    sys.add(normal, strict_rel, rhs);
    return decide(sys).feasible();
  };
  for (int i : super.I) {
    if (violated(u.row(i), Rel::GT, super.a[i])) return false;
    if (violated(u.row(i), Rel::LT, super.a[i])) return false;
  }
  for (int j : super.J)
    if (violated(u.row(j), Rel::GT, super.a[j])) return false;
  for (int k : super.K)
    if (violated(u.row(k), Rel::LT, super.a[k])) return false;
  return true;
}

bool polyhedron_point_set_equal(const Mat& u, const Tetrad& t1,
                                const Tetrad& t2) {
  return polyhedron_subset(u, t1, t2) && polyhedron_subset(u, t2, t1);
}

}  // namespace hsl
