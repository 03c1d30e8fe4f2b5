// Exact rational scalar built on GMP. Every real quantity in the library is
// one of these; there is no floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hsl {

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Serializes as "p/q", or "p" when the denominator is 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long num) : v_(num) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  static Rat parse(const std::string& text);

  std::string str() const;

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline std::string Rat::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

inline Rat Rat::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);  // GMP rejects a leading '+'
  if (s.empty()) throw std::invalid_argument("Rat: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(mpq_class(mpz_class(s)));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat: cannot parse '" + text + "'");
  }
}

using Vec = std::vector<Rat>;

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace hsl
