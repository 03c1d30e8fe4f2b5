// Sign vectors over {+, 0, -}: the position record of a point or open face
// relative to every hyperplane, and the covectors of oriented matroids.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsl/rational.hpp"

namespace hsl {

/// One entry of a sign vector; values are exactly -1, 0, +1.
using Sign = int8_t;

inline Sign sign_of(const Rat& x) { return static_cast<Sign>(x.sign()); }

class SignVec {
 public:
  SignVec() = default;
  explicit SignVec(std::vector<Sign> s) : s_(std::move(s)) {}
  explicit SignVec(size_t n) : s_(n, 0) {}

  size_t size() const { return s_.size(); }
  Sign operator[](size_t i) const { return s_[i]; }
  Sign& operator[](size_t i) { return s_[i]; }

  /// Compact form like "+-0-". parse() also accepts comma-separated entries.
  std::string str() const;
  static SignVec parse(const std::string& text);

  SignVec opposite() const {
    std::vector<Sign> t(s_.size());
    for (size_t i = 0; i < s_.size(); ++i) t[i] = static_cast<Sign>(-s_[i]);
    return SignVec(std::move(t));
  }

  /// Composition x∘y: keeps x where nonzero, fills from y elsewhere.
  SignVec compose(const SignVec& y) const {
    std::vector<Sign> t(s_.size());
    for (size_t i = 0; i < s_.size(); ++i) t[i] = s_[i] != 0 ? s_[i] : y[i];
    return SignVec(std::move(t));
  }

  std::vector<size_t> separation(const SignVec& y) const {
    std::vector<size_t> sep;
    for (size_t i = 0; i < s_.size(); ++i)
      if (s_[i] == -y[i] && s_[i] != 0) sep.push_back(i);
    return sep;
  }

  std::vector<size_t> support() const {
    std::vector<size_t> sup;
    for (size_t i = 0; i < s_.size(); ++i)
      if (s_[i] != 0) sup.push_back(i);
    return sup;
  }

  bool is_zero() const {
    for (Sign x : s_)
      if (x != 0) return false;
    return true;
  }

  SignVec restrict_to(const std::vector<size_t>& keep) const {
    std::vector<Sign> t;
    t.reserve(keep.size());
    for (size_t i : keep) t.push_back(s_[i]);
    return SignVec(std::move(t));
  }

  SignVec append(Sign last) const {
    std::vector<Sign> t = s_;
    t.push_back(last);
    return SignVec(std::move(t));
  }

  /// Entrywise sign order: 0 below both + and -, which are incomparable.
  /// Encodes face inclusion.
  friend bool sign_leq(const SignVec& lo, const SignVec& hi) {
    if (lo.size() != hi.size()) return false;
    for (size_t i = 0; i < lo.size(); ++i)
      if (lo[i] != 0 && lo[i] != hi[i]) return false;
    return true;
  }

  friend bool operator==(const SignVec& a, const SignVec& b) {
    return a.s_ == b.s_;
  }
  /// Lexicographic with 0 < - < +; the canonical reporting order.
  friend bool operator<(const SignVec& a, const SignVec& b) {
    auto key = [](Sign s) { return s == 0 ? 0 : (s < 0 ? 1 : 2); };
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return key(a[i]) < key(b[i]);
    return false;
  }

 private:
  std::vector<Sign> s_;
};

inline std::string SignVec::str() const {
  std::string out;
  out.reserve(size());
  for (Sign x : s_) out.push_back(x == 0 ? '0' : (x < 0 ? '-' : '+'));
  return out;
}

inline SignVec SignVec::parse(const std::string& text) {
  std::vector<Sign> s;
  for (char c : text) {
    switch (c) {
      case '+': s.push_back(1); break;
      case '-': s.push_back(-1); break;
      case '0': s.push_back(0); break;
      case ',': case ' ': break;
      default:
        throw std::invalid_argument("SignVec: bad character in '" + text + "'");
    }
  }
  return SignVec(std::move(s));
}

}  // namespace hsl
