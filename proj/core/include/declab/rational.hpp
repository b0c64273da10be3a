// Exact rational scalars on top of GMP. Values are always canonical:
// denominator > 0 and gcd(|numerator|, denominator) = 1. No operation in
// this type rounds; decimal output is explicit, fixed point, and rounds
// half away from zero.
#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace declab {

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // implicit: lets integer literals mix into arithmetic
  Rat(int n) : v_(n) {}
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpz_class& n) : v_(n) {}
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "p/q", optional leading +/-, ASCII digits only.
  static Rat parse(const std::string& text);

  std::string str() const;  // "p" when integral, else "p/q"
  // Fixed-point rendering with `digits` fractional digits (digits >= 0).
  std::string decimal(int digits) const;
  double dbl() const { return v_.get_d(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sgn() const { return ::sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

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

  // base^e; e < 0 requires base != 0.
  static Rat pow(const Rat& base, long e);
  static Rat abs(const Rat& a) { return Rat(mpq_class(::abs(a.v_))); }
  static Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
  static Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace declab
