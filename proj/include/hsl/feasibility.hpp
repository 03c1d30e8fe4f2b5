// Exact decision procedure for mixed systems of linear equalities, weak and
// strict inequalities: either a witness point or a verified Farkas-type
// certificate. Plus a small exact LP optimizer.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsl/linalg.hpp"
#include "hsl/rational.hpp"

namespace hsl {

enum class Rel { EQ, LE, LT, GE, GT };

std::string rel_str(Rel r);
Rel rel_parse(const std::string& s);
bool rel_is_strict(Rel r);

struct LinCon {
  Vec normal;
  Rat rhs;
  Rel rel = Rel::LE;
};

struct MixedSystem {
  size_t n = 0;
  std::vector<LinCon> rows;

  void add(Vec normal, Rel rel, Rat rhs) {
    if (normal.size() != n)
      throw std::invalid_argument("MixedSystem: normal length mismatch");
    rows.push_back(LinCon{std::move(normal), std::move(rhs), rel});
  }
  bool has_strict() const {
    for (const auto& r : rows)
      if (rel_is_strict(r.rel)) return true;
    return false;
  }
};

/// Does x satisfy the constraint / the whole system, exactly?
bool satisfies(const LinCon& c, const Vec& x);
bool satisfies(const MixedSystem& sys, const Vec& x);

/// Multiplier certificate of infeasibility: y has one entry per row,
/// nonnegative on LE/LT rows, nonpositive on GE/GT rows, free on EQ rows,
/// with  sum_i y_i * normal_i = 0  and either  <y, rhs> < 0, or
/// <y, rhs> = 0 with a nonzero multiplier on some strict row.
enum class CertFlag { StrictlyNegative, ZeroWithStrictSupport };

struct FarkasCertificate {
  Vec y;
  CertFlag flag = CertFlag::StrictlyNegative;
};

/// Exact invariant check; used internally before any certificate is returned.
bool certificate_valid(const MixedSystem& sys, const FarkasCertificate& cert);

struct DecideResult {
  std::optional<Vec> witness;                // set iff feasible
  std::optional<FarkasCertificate> cert;     // set iff infeasible
  bool feasible() const { return witness.has_value(); }
};

/// Exactly one of witness / certificate, both verified exactly before
/// returning (a verification failure is a bug, reported as std::logic_error).
/// The empty system is feasible with the origin as witness.
DecideResult decide(const MixedSystem& sys);

struct LpOutcome {
  enum class Kind { Optimal, Unbounded, Infeasible } kind = Kind::Infeasible;
  Vec point;   // Optimal
  Rat value;   // Optimal
  Vec ray;     // Unbounded: recession direction improving the objective
  std::optional<FarkasCertificate> cert;  // Infeasible
};

/// Maximize <objective, x> over a system with only EQ/LE/GE rows.
/// Throws std::invalid_argument if a strict row is present.
LpOutcome optimize(const Vec& objective, const MixedSystem& sys);

}  // namespace hsl
