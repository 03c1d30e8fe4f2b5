#include "hsl/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hsl {

Arrangement make_arrangement(Mat u, Vec a) {
  if (a.size() != u.rows)
    throw std::invalid_argument("arrangement: offset length != row count");
  for (size_t i = 0; i < u.rows; ++i)
    if (is_zero(u.row(i)))
      throw std::invalid_argument("arrangement: zero normal row");
  return Arrangement{std::move(u), std::move(a)};
}

bool is_multi(const Mat& u) {
  // u_i proportional to u_j: all 2x2 minors of the pair vanish and both have
  // their nonzero entries in the same coordinates.
  auto proportional = [&](size_t i, size_t j) {
    int li = -1;
    for (size_t c = 0; c < u.cols; ++c)
      if (!u.at(i, c).is_zero()) { li = static_cast<int>(c); break; }
    if (li < 0) return is_zero(u.row(j));
    if (u.at(j, li).is_zero()) return false;
    Rat f = u.at(j, li) / u.at(i, li);
    for (size_t c = 0; c < u.cols; ++c)
      if (u.at(j, c) != f * u.at(i, c)) return false;
    return true;
  };
  for (size_t i = 0; i < u.rows; ++i)
    for (size_t j = i + 1; j < u.rows; ++j)
      if (proportional(i, j)) return true;
  return false;
}

SignVec sign_of_point(const Arrangement& arr, const Vec& x) {
  if (x.size() != arr.n())
    throw std::invalid_argument("sign_of_point: dimension mismatch");
  SignVec s(arr.m());
  for (size_t i = 0; i < arr.m(); ++i)
    s[i] = sign_of(dot(arr.u.row(i), x) - arr.a[i]);
  return s;
}

namespace {

Rel rel_for_sign(Sign s) {
  return s == 0 ? Rel::EQ : (s < 0 ? Rel::LT : Rel::GT);
}

int face_dim(const Arrangement& arr, const SignVec& sign) {
  std::vector<int> tight;
  for (size_t i = 0; i < arr.m(); ++i)
    if (sign[i] == 0) tight.push_back(static_cast<int>(i));
  return static_cast<int>(arr.n()) -
         static_cast<int>(rank(arr.u.select_rows(tight)));
}

// DFS over partial sign assignments. The parent's witness settles most
// children without an LP call; only genuinely undecided branches are solved.
void sign_dfs(const Arrangement& arr, size_t k, MixedSystem& partial,
              SignVec& sign, const Vec& witness,
              std::vector<ArrangementFace>& out) {
  if (k == arr.m()) {
    out.push_back(ArrangementFace{sign, witness, face_dim(arr, sign)});
    return;
  }
  Sign have = sign_of(dot(arr.u.row(k), witness) - arr.a[k]);
  for (Sign s : {Sign(0), Sign(-1), Sign(1)}) {
    sign[k] = s;
    if (s == have) {
      partial.rows.push_back(LinCon{arr.u.row(k), arr.a[k], rel_for_sign(s)});
      sign_dfs(arr, k + 1, partial, sign, witness, out);
      partial.rows.pop_back();
      continue;
    }
    partial.rows.push_back(LinCon{arr.u.row(k), arr.a[k], rel_for_sign(s)});
    DecideResult r = decide(partial);
    if (r.feasible()) sign_dfs(arr, k + 1, partial, sign, *r.witness, out);
    partial.rows.pop_back();
  }
}

}  // namespace

std::vector<ArrangementFace> faces(const Arrangement& arr) {
  std::vector<ArrangementFace> out;
  MixedSystem partial;
  partial.n = arr.n();
  SignVec sign(arr.m());
  sign_dfs(arr, 0, partial, sign, Vec(arr.n()), out);
  std::sort(out.begin(), out.end(),
            [](const ArrangementFace& x, const ArrangementFace& y) {
              return x.sign < y.sign;
            });
  return out;
}

std::vector<SignVec> sign_set(const Arrangement& arr) {
  std::vector<SignVec> out;
  for (const ArrangementFace& f : faces(arr)) out.push_back(f.sign);
  return out;
}

std::vector<SignVec> sign_set_bruteforce(const Arrangement& arr) {
  if (arr.m() > 13) throw DeskScaleExceededError("3^m sign enumeration");
  std::vector<SignVec> out;
  size_t total = 1;
  for (size_t i = 0; i < arr.m(); ++i) total *= 3;
  for (size_t code = 0; code < total; ++code) {
    SignVec s(arr.m());
    size_t c = code;
    for (size_t i = 0; i < arr.m(); ++i) {
      s[i] = static_cast<Sign>(static_cast<int>(c % 3) - 1);
      c /= 3;
    }
    MixedSystem sys;
    sys.n = arr.n();
    for (size_t i = 0; i < arr.m(); ++i)
      sys.add(arr.u.row(i), rel_for_sign(s[i]), arr.a[i]);
    if (decide(sys).feasible()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset face_poset(const Arrangement& arr) {
  std::vector<SignVec> signs = sign_set(arr);
  size_t n = signs.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const SignVec& s : signs) labels.push_back(s.str());
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) le[i][j] = sign_leq(signs[i], signs[j]);
  return Poset(std::move(labels), std::move(le));
}

namespace {

struct Flat {
  Mat sys;  // echelon form of [U_S | a_S], zero rows dropped
  std::string key;
};

std::string flat_key(const Mat& reduced) {
  std::ostringstream os;
  for (size_t i = 0; i < reduced.rows; ++i) {
    for (size_t j = 0; j < reduced.cols; ++j) {
      if (j) os << ',';
      os << reduced.at(i, j).str();
    }
    os << '|';
  }
  return os.str();
}

// flat(x) contains flat(y) iff appending x's equations to y's adds no rank.
bool flat_contains(const Flat& x, const Flat& y) {
  if (x.sys.rows == 0) return true;
  std::vector<Vec> stacked;
  for (size_t i = 0; i < y.sys.rows; ++i) stacked.push_back(y.sys.row(i));
  for (size_t i = 0; i < x.sys.rows; ++i) stacked.push_back(x.sys.row(i));
  return rank(Mat::from_rows(stacked, x.sys.cols)) == y.sys.rows;
}

}  // namespace

Poset intersection_poset(const Arrangement& arr) {
  if (arr.m() > 16) throw DeskScaleExceededError("2^m flat enumeration");
  std::map<std::string, Flat> flats;
  for (size_t mask = 0; mask < (size_t{1} << arr.m()); ++mask) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < arr.m(); ++i) {
      if (!(mask & (size_t{1} << i))) continue;
      Vec row = arr.u.row(i);
      row.push_back(arr.a[i]);
      rows.push_back(std::move(row));
    }
    Rref e = rref(Mat::from_rows(rows, arr.n() + 1));
    bool inconsistent = false;
    for (size_t c : e.pivots)
      if (c == arr.n()) inconsistent = true;
    if (inconsistent) continue;  // empty intersection: not a flat
    std::vector<Vec> reduced;
    for (size_t i = 0; i < e.rank; ++i) reduced.push_back(e.r.row(i));
    Flat f{Mat::from_rows(reduced, arr.n() + 1), ""};
    f.key = flat_key(f.sys);
    flats.emplace(f.key, std::move(f));
  }
  std::vector<const Flat*> list;
  for (const auto& [key, f] : flats) list.push_back(&f);
  size_t n = list.size();
  std::vector<std::string> labels;
  for (const Flat* f : list) labels.push_back(f->key);
  // Reverse inclusion: x <= y iff flat(x) contains flat(y).
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      le[i][j] = flat_contains(*list[i], *list[j]);
  return Poset(std::move(labels), std::move(le));
}

bool sign_equivalent(const Arrangement& a, const Arrangement& b) {
  if (a.m() != b.m())
    throw std::invalid_argument("sign_equivalent: hyperplane counts differ");
  return sign_set(a) == sign_set(b);
}

bool combinatorially_equivalent(const Arrangement& a, const Arrangement& b) {
  return poset_isomorphic(face_poset(a), face_poset(b));
}

bool semilattice_equivalent(const Arrangement& a, const Arrangement& b) {
  return poset_isomorphic(intersection_poset(a), intersection_poset(b));
}

ActiveTriple valid_active_triple(const Arrangement& arr,
                                 const ArrangementFace& face) {
  if (face.sign.size() != arr.m() ||
      !(sign_of_point(arr, face.witness) == face.sign))
    throw std::invalid_argument("valid_active_triple: not a face");
  MixedSystem closure;
  closure.n = arr.n();
  for (size_t i = 0; i < arr.m(); ++i) {
    Rel rel = face.sign[i] == 0 ? Rel::EQ
              : face.sign[i] < 0 ? Rel::LE
                                 : Rel::GE;
    closure.add(arr.u.row(i), rel, arr.a[i]);
  }
  ActiveTriple t;
  for (size_t i = 0; i < arr.m(); ++i) {
    if (face.sign[i] == 0) {
      t.I.push_back(static_cast<int>(i));
      continue;
    }
    MixedSystem touch = closure;
    touch.add(arr.u.row(i), Rel::EQ, arr.a[i]);
    if (!decide(touch).feasible()) continue;  // hyperplane misses the closure
    if (face.sign[i] < 0)
      t.J.push_back(static_cast<int>(i));
    else
      t.K.push_back(static_cast<int>(i));
  }
  return t;
}

bool normally_equivalent_translations(const Mat& u, const Vec& a,
                                      const Vec& b) {
  if (is_multi(u)) throw MultiArrangementError();
  Arrangement arr_a = make_arrangement(u, a);
  Arrangement arr_b = make_arrangement(u, b);
  auto collect = [](const Arrangement& arr) {
    std::map<ActiveTriple, SignVec> by_triple;
    for (const ArrangementFace& f : faces(arr)) {
      auto [it, fresh] = by_triple.emplace(valid_active_triple(arr, f), f.sign);
      if (!fresh)
        throw std::logic_error("valid active triple repeated within one "
                               "non-multi arrangement");
    }
    return by_triple;
  };
  std::map<ActiveTriple, SignVec> ta = collect(arr_a);
  std::map<ActiveTriple, SignVec> tb = collect(arr_b);
  if (ta.size() != tb.size()) return false;
  for (const auto& [triple, sign] : ta)
    if (!tb.count(triple)) return false;
  // The triple-matching bijection must preserve the face order on sign labels.
  for (const auto& [t1, s1a] : ta)
    for (const auto& [t2, s2a] : ta) {
      const SignVec& s1b = tb.at(t1);
      const SignVec& s2b = tb.at(t2);
      if (sign_leq(s1a, s2a) != sign_leq(s1b, s2b)) return false;
    }
  return true;
}

Arrangement reorient(const Arrangement& arr, const std::vector<int>& s) {
  Arrangement out = arr;
  for (int i : s) {
    if (i < 0 || static_cast<size_t>(i) >= arr.m())
      throw std::invalid_argument("reorient: index out of range");
    for (size_t c = 0; c < arr.n(); ++c) out.u.at(i, c) = -out.u.at(i, c);
    out.a[i] = -out.a[i];
  }
  return out;
}

Arrangement relabel(const Arrangement& arr, const std::vector<int>& perm) {
  if (perm.size() != arr.m())
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> seen(arr.m(), false);
  for (int p : perm) {
    if (p < 0 || static_cast<size_t>(p) >= arr.m() || seen[p])
      throw std::invalid_argument("relabel: not a permutation");
    seen[p] = true;
  }
  Mat u(arr.m(), arr.n());
  Vec a(arr.m());
  for (size_t i = 0; i < arr.m(); ++i) {
    for (size_t c = 0; c < arr.n(); ++c) u.at(i, c) = arr.u.at(perm[i], c);
    a[i] = arr.a[perm[i]];
  }
  return Arrangement{std::move(u), std::move(a)};
}

}  // namespace hsl
