#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "klc/field.hpp"

namespace klc {

// a + b*zeta with zeta = exp(2 pi i / 3), reduced by zeta^2 = -1 - zeta.
class CycInt {
 public:
  CycInt() = default;
  CycInt(mpz_class a, mpz_class b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  CycInt(long a) : a_(a) {}

  static CycInt zeta() { return {0, 1}; }
  static CycInt zeta_squared() { return {-1, -1}; }
  // zeta^k for any integer k.
  static CycInt zeta_pow(long k);
  // n0 + n1*zeta + n2*zeta^2: a character sum given how often each cube
  // root of unity occurs.
  static CycInt from_root_counts(const mpz_class& n0, const mpz_class& n1, const mpz_class& n2);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }

  bool is_rational() const { return b_ == 0; }
  // The rational integer value; throws InternalError if b != 0.
  mpz_class to_integer() const;
  // Same as to_integer but returns a narrow integer; throws if it does not fit.
  long to_long() const;

  CycInt conj() const { return {a_ - b_, -b_}; }
  // u * conj(u) = a^2 - ab + b^2.
  mpz_class norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  // 2 Re(u) = 2a - b.
  mpz_class two_re() const { return 2 * a_ - b_; }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);

  friend CycInt operator+(CycInt u, const CycInt& v) { return u += v; }
  friend CycInt operator-(CycInt u, const CycInt& v) { return u -= v; }
  friend CycInt operator*(CycInt u, const CycInt& v) { return u *= v; }
  friend CycInt operator-(const CycInt& u) { return {-u.a_, -u.b_}; }
  friend bool operator==(const CycInt& u, const CycInt& v) { return u.a_ == v.a_ && u.b_ == v.b_; }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CycInt& u) { return os << u.to_string(); }

 private:
  mpz_class a_ = 0;
  mpz_class b_ = 0;
};

inline mpz_class two_re(const CycInt& u) { return u.two_re(); }

// Canonical additive character x -> zeta^tr(x).
CycInt lambda_char(const Field& f, FieldElement x);

// Accumulates sum_x zeta^tr(x) by counting trace values, then converts once.
class CharacterAccumulator {
 public:
  void add_trace(int t, std::uint64_t times = 1) { counts_[t] += times; }
  void add(const Field& f, FieldElement x, std::uint64_t times = 1) { add_trace(f.trace(x), times); }
  CycInt value() const;
  const std::array<std::uint64_t, 3>& counts() const { return counts_; }

 private:
  std::array<std::uint64_t, 3> counts_{};
};

}  // namespace klc
