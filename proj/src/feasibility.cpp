#include "hsl/feasibility.hpp"

#include <cassert>
#include <stdexcept>

namespace hsl {

std::string rel_str(Rel r) {
  switch (r) {
    case Rel::EQ: return "EQ";
    case Rel::LE: return "LE";
    case Rel::LT: return "LT";
    case Rel::GE: return "GE";
    case Rel::GT: return "GT";
  }
  return "?";
}

Rel rel_parse(const std::string& s) {
  if (s == "EQ") return Rel::EQ;
  if (s == "LE") return Rel::LE;
  if (s == "LT") return Rel::LT;
  if (s == "GE") return Rel::GE;
  if (s == "GT") return Rel::GT;
  throw std::invalid_argument("unknown relation '" + s + "'");
}

bool rel_is_strict(Rel r) { return r == Rel::LT || r == Rel::GT; }

bool satisfies(const LinCon& c, const Vec& x) {
  Rat lhs = dot(c.normal, x);
  switch (c.rel) {
    case Rel::EQ: return lhs == c.rhs;
    case Rel::LE: return lhs <= c.rhs;
    case Rel::LT: return lhs < c.rhs;
    case Rel::GE: return lhs >= c.rhs;
    case Rel::GT: return lhs > c.rhs;
  }
  return false;
}

bool satisfies(const MixedSystem& sys, const Vec& x) {
  if (x.size() != sys.n) return false;
  for (const auto& row : sys.rows)
    if (!satisfies(row, x)) return false;
  return true;
}

bool certificate_valid(const MixedSystem& sys, const FarkasCertificate& cert) {
  if (cert.y.size() != sys.rows.size()) return false;
  Vec comb(sys.n);
  Rat s;
  bool strict_support = false;
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& row = sys.rows[i];
    const Rat& yi = cert.y[i];
    if ((row.rel == Rel::LE || row.rel == Rel::LT) && yi.sign() < 0)
      return false;
    if ((row.rel == Rel::GE || row.rel == Rel::GT) && yi.sign() > 0)
      return false;
    if (rel_is_strict(row.rel) && !yi.is_zero()) strict_support = true;
    for (size_t j = 0; j < sys.n; ++j) comb[j] += yi * row.normal[j];
    s += yi * row.rhs;
  }
  if (!is_zero(comb)) return false;
  if (cert.flag == CertFlag::StrictlyNegative) return s.sign() < 0;
  return s.is_zero() && strict_support;
}

// ---------------------------------------------------------------------------
// Exact simplex over the standard form  max c.z  s.t.  M z = d, z >= 0,
// two phases, Bland's anti-cycling rule throughout.
// ---------------------------------------------------------------------------
namespace {

struct StdResult {
  enum class Status { Optimal, Unbounded, Infeasible } status;
  Vec z;
  Rat value;
  Vec ray;
};

class StdSimplex {
 public:
  StdSimplex(const Mat& m, const Vec& d) : nv_(m.cols), nrows_(m.rows) {
    // One artificial per row; rows scaled so the rhs is nonnegative.
    ncols_ = nv_ + nrows_;
    t_.assign(nrows_, Vec(ncols_ + 1));
    basis_.resize(nrows_);
    for (size_t i = 0; i < nrows_; ++i) {
      bool flip = d[i].sign() < 0;
      for (size_t j = 0; j < nv_; ++j)
        t_[i][j] = flip ? -m.at(i, j) : m.at(i, j);
      t_[i][nv_ + i] = Rat(1);
      t_[i][ncols_] = flip ? -d[i] : d[i];
      basis_[i] = nv_ + i;
    }
  }

  StdResult run(const Vec& cost) {
    // Phase 1: drive the artificial variables to zero.
    Vec c1(ncols_);
    for (size_t j = nv_; j < ncols_; ++j) c1[j] = Rat(-1);
    StdResult r1 = iterate(c1, ncols_);
    assert(r1.status == StdResult::Status::Optimal);
    if (objective_value(c1).sign() < 0)
      return {StdResult::Status::Infeasible, {}, Rat(0), {}};
    purge_artificials();
    // Phase 2: the caller's objective over structural columns only.
    Vec c2(ncols_);
    for (size_t j = 0; j < nv_; ++j) c2[j] = cost[j];
    StdResult r2 = iterate(c2, nv_);
    if (r2.status == StdResult::Status::Unbounded) {
      r2.ray.resize(nv_);
      return r2;
    }
    r2.z.assign(nv_, Rat(0));
    for (size_t i = 0; i < nrows_; ++i)
      if (basis_[i] < nv_) r2.z[basis_[i]] = t_[i][ncols_];
    r2.value = objective_value(c2);
    return r2;
  }

 private:
  Rat objective_value(const Vec& c) const {
    Rat v;
    for (size_t i = 0; i < nrows_; ++i) v += c[basis_[i]] * t_[i][ncols_];
    return v;
  }

  Vec reduced_costs(const Vec& c) const {
    Vec red(ncols_);
    for (size_t j = 0; j < ncols_; ++j) red[j] = c[j];
    for (size_t i = 0; i < nrows_; ++i) {
      const Rat& cb = c[basis_[i]];
      if (cb.is_zero()) continue;
      for (size_t j = 0; j < ncols_; ++j) red[j] -= cb * t_[i][j];
    }
    return red;
  }

  void pivot(size_t r, size_t e) {
    Rat inv = Rat(1) / t_[r][e];
    for (Rat& x : t_[r]) x *= inv;
    for (size_t i = 0; i < nrows_; ++i) {
      if (i == r || t_[i][e].is_zero()) continue;
      Rat f = t_[i][e];
      for (size_t j = 0; j <= ncols_; ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = e;
  }

  // Bland: entering = smallest improving column below jlimit, leaving = the
  // minimum-ratio row whose basic variable has the smallest index.
  StdResult iterate(const Vec& c, size_t jlimit) {
    for (;;) {
      Vec red = reduced_costs(c);
      size_t enter = jlimit;
      for (size_t j = 0; j < jlimit; ++j) {
        if (red[j].sign() > 0) { enter = j; break; }
      }
      if (enter == jlimit)
        return {StdResult::Status::Optimal, {}, Rat(0), {}};
      size_t leave = nrows_;
      Rat best;
      for (size_t i = 0; i < nrows_; ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Rat ratio = t_[i][ncols_] / t_[i][enter];
        if (leave == nrows_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == nrows_) {
        StdResult r{StdResult::Status::Unbounded, {}, Rat(0), {}};
        r.ray.assign(ncols_, Rat(0));
        r.ray[enter] = Rat(1);
        for (size_t i = 0; i < nrows_; ++i) r.ray[basis_[i]] = -t_[i][enter];
        return r;
      }
      pivot(leave, enter);
    }
  }

  // After a zero-valued phase 1: pivot artificials out of the basis, dropping
  // redundant rows that have no structural entry left.
  void purge_artificials() {
    for (size_t i = 0; i < nrows_;) {
      if (basis_[i] < nv_) { ++i; continue; }
      size_t e = nv_;
      for (size_t j = 0; j < nv_; ++j)
        if (!t_[i][j].is_zero()) { e = j; break; }
      if (e < nv_) {
        pivot(i, e);
        ++i;
      } else {
        t_.erase(t_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --nrows_;
      }
    }
    // Artificial columns must never re-enter.
    for (size_t i = 0; i < nrows_; ++i)
      for (size_t j = nv_; j < ncols_; ++j) t_[i][j] = Rat(0);
  }

  size_t nv_;
  size_t nrows_;
  size_t ncols_;
  std::vector<Vec> t_;
  std::vector<size_t> basis_;
};

StdResult solve_standard(const Mat& m, const Vec& d, const Vec& c) {
  if (d.size() != m.rows || c.size() != m.cols)
    throw std::invalid_argument("solve_standard: shape mismatch");
  StdSimplex s(m, d);
  return s.run(c);
}

// A weak inequality system  A x <= b  with x free, kept row-by-row with a tag
// linking each row back to its origin in a MixedSystem.
struct WeakRow {
  Vec normal;
  Rat rhs;
  size_t origin;  // index into the MixedSystem, SIZE_MAX for the t-row
  int orientation;  // +1 row entered as-is, -1 row entered negated
};

struct WeakSystem {
  size_t n = 0;
  std::vector<WeakRow> rows;
};

// x free -> x = p - q with p, q >= 0; one slack per row.
struct StdEncoding {
  Mat m;
  Vec d;
  size_t n = 0;

  Vec to_x(const Vec& z) const {
    Vec x(n);
    for (size_t j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
    return x;
  }
};

StdEncoding encode_weak(const WeakSystem& w) {
  StdEncoding e;
  e.n = w.n;
  size_t nr = w.rows.size();
  e.m = Mat(nr, 2 * w.n + nr);
  e.d.resize(nr);
  for (size_t i = 0; i < nr; ++i) {
    for (size_t j = 0; j < w.n; ++j) {
      e.m.at(i, j) = w.rows[i].normal[j];
      e.m.at(i, w.n + j) = -w.rows[i].normal[j];
    }
    e.m.at(i, 2 * w.n + i) = Rat(1);
    e.d[i] = w.rows[i].rhs;
  }
  return e;
}

std::optional<Vec> weak_feasible_point(const WeakSystem& w) {
  StdEncoding e = encode_weak(w);
  StdResult r = solve_standard(e.m, e.d, Vec(e.m.cols));
  if (r.status == StdResult::Status::Infeasible) return std::nullopt;
  return e.to_x(r.z);
}

// Homogenization of the mixed system: variables (x, t), every row weak.
// Strict rows get slack -1; the extra row encodes t >= 1.
WeakSystem homogenize(const MixedSystem& sys) {
  WeakSystem w;
  w.n = sys.n + 1;
  Vec trow(w.n);
  trow[sys.n] = Rat(-1);
  w.rows.push_back({trow, Rat(-1), SIZE_MAX, +1});
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    const LinCon& row = sys.rows[i];
    auto push = [&](int orient, const Rat& slack) {
      Vec v(w.n);
      for (size_t j = 0; j < sys.n; ++j)
        v[j] = orient > 0 ? row.normal[j] : -row.normal[j];
      v[sys.n] = orient > 0 ? -row.rhs : row.rhs;
      w.rows.push_back({std::move(v), slack, i, orient});
    };
    switch (row.rel) {
      case Rel::EQ: push(+1, Rat(0)); push(-1, Rat(0)); break;
      case Rel::LE: push(+1, Rat(0)); break;
      case Rel::LT: push(+1, Rat(-1)); break;
      case Rel::GE: push(-1, Rat(0)); break;
      case Rel::GT: push(-1, Rat(-1)); break;
    }
  }
  return w;
}

// Farkas alternative of  A x <= b:  find  y >= 0,  y A = 0,  <y, b> = -1.
std::optional<Vec> weak_alternative(const WeakSystem& w) {
  size_t nr = w.rows.size();
  Mat m(w.n + 1, nr);
  Vec d(w.n + 1);
  for (size_t k = 0; k < nr; ++k) {
    for (size_t j = 0; j < w.n; ++j) m.at(j, k) = w.rows[k].normal[j];
    m.at(w.n, k) = w.rows[k].rhs;
  }
  d[w.n] = Rat(-1);
  StdResult r = solve_standard(m, d, Vec(nr));
  if (r.status == StdResult::Status::Infeasible) return std::nullopt;
  return r.z;
}

FarkasCertificate certificate_from_alt(const MixedSystem& sys,
                                       const WeakSystem& w, const Vec& ytilde) {
  FarkasCertificate cert;
  cert.y.assign(sys.rows.size(), Rat(0));
  for (size_t k = 0; k < w.rows.size(); ++k) {
    if (w.rows[k].origin == SIZE_MAX) continue;
    if (w.rows[k].orientation > 0)
      cert.y[w.rows[k].origin] += ytilde[k];
    else
      cert.y[w.rows[k].origin] -= ytilde[k];
  }
  Rat s;
  for (size_t i = 0; i < sys.rows.size(); ++i) s += cert.y[i] * sys.rows[i].rhs;
  if (s.sign() < 0) {
    cert.flag = CertFlag::StrictlyNegative;
    Rat scale = Rat(-1) / s;  // normalize to <y, rhs> = -1
    for (Rat& yi : cert.y) yi *= scale;
  } else {
    cert.flag = CertFlag::ZeroWithStrictSupport;
  }
  return cert;
}

}  // namespace

DecideResult decide(const MixedSystem& sys) {
  for (const auto& row : sys.rows)
    if (row.normal.size() != sys.n)
      throw std::invalid_argument("decide: row dimension mismatch");
  if (sys.rows.empty()) return DecideResult{Vec(sys.n), std::nullopt};

  WeakSystem w = homogenize(sys);
  if (auto xt = weak_feasible_point(w)) {
    Rat t = (*xt)[sys.n];
    Vec x(sys.n);
    for (size_t j = 0; j < sys.n; ++j) x[j] = (*xt)[j] / t;
    if (!satisfies(sys, x))
      throw std::logic_error("decide: witness failed exact verification");
    return DecideResult{std::move(x), std::nullopt};
  }
  auto ytilde = weak_alternative(w);
  if (!ytilde)
    throw std::logic_error("decide: both Farkas alternatives infeasible");
  FarkasCertificate cert = certificate_from_alt(sys, w, *ytilde);
  if (!certificate_valid(sys, cert))
    throw std::logic_error("decide: certificate failed exact verification");
  return DecideResult{std::nullopt, std::move(cert)};
}

LpOutcome optimize(const Vec& objective, const MixedSystem& sys) {
  if (objective.size() != sys.n)
    throw std::invalid_argument("optimize: objective length mismatch");
  if (sys.has_strict())
    throw std::invalid_argument("optimize: strict rows not allowed");

  DecideResult feas = decide(sys);
  if (!feas.feasible()) {
    LpOutcome out;
    out.kind = LpOutcome::Kind::Infeasible;
    out.cert = std::move(feas.cert);
    return out;
  }

  // Standard form: x = p - q; slack +1 on LE rows, -1 on GE rows.
  size_t nr = sys.rows.size();
  Mat m(nr, 2 * sys.n + nr);
  Vec d(nr);
  Vec c(m.cols);
  for (size_t i = 0; i < nr; ++i) {
    const LinCon& row = sys.rows[i];
    for (size_t j = 0; j < sys.n; ++j) {
      m.at(i, j) = row.normal[j];
      m.at(i, sys.n + j) = -row.normal[j];
    }
    if (row.rel == Rel::LE) m.at(i, 2 * sys.n + i) = Rat(1);
    if (row.rel == Rel::GE) m.at(i, 2 * sys.n + i) = Rat(-1);
    d[i] = row.rhs;
  }
  for (size_t j = 0; j < sys.n; ++j) {
    c[j] = objective[j];
    c[sys.n + j] = -objective[j];
  }

  StdResult r = solve_standard(m, d, c);
  LpOutcome out;
  if (r.status == StdResult::Status::Unbounded) {
    out.kind = LpOutcome::Kind::Unbounded;
    out.ray.resize(sys.n);
    for (size_t j = 0; j < sys.n; ++j) out.ray[j] = r.ray[j] - r.ray[sys.n + j];
    for (const auto& row : sys.rows) {
      Rat v = dot(row.normal, out.ray);
      bool ok = row.rel == Rel::EQ   ? v.is_zero()
                : row.rel == Rel::LE ? v.sign() <= 0
                                     : v.sign() >= 0;
      if (!ok) throw std::logic_error("optimize: bad recession ray");
    }
    if (dot(objective, out.ray).sign() <= 0)
      throw std::logic_error("optimize: ray does not improve the objective");
    return out;
  }
  if (r.status == StdResult::Status::Infeasible)
    throw std::logic_error("optimize: lost feasibility in phase 1");
  out.kind = LpOutcome::Kind::Optimal;
  out.point.resize(sys.n);
  for (size_t j = 0; j < sys.n; ++j) out.point[j] = r.z[j] - r.z[sys.n + j];
  out.value = dot(objective, out.point);
  if (!satisfies(sys, out.point))
    throw std::logic_error("optimize: optimum failed exact verification");
  return out;
}

}  // namespace hsl
