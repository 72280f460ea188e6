#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace klc {

// Polynomial over GF(3), coefficient of t^k at index k (constant term first).
using Poly3 = std::vector<int>;

// An element of GF(3^r), identified by its canonical encoding
// enc(x) = sum_k coeffs[k] * 3^k in the polynomial basis of its Field.
// The value is only meaningful together with the Field that produced it.
struct FieldElement {
  std::uint32_t enc = 0;

  constexpr bool is_zero() const { return enc == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

// GF(3^r) for 1 <= r <= 8 in a fixed polynomial basis.
//
// Immutable after construction. Multiplication goes through log/exp tables
// built from the smallest-encoding primitive element; addition is digit-wise
// mod 3 on the encoding. The trace and square-class of every element are
// tabulated at construction.
class Field {
 public:
  static constexpr int kMaxExponent = 8;

  // Builds GF(3^r). Without a modulus, picks the monic irreducible polynomial
  // of degree r with the smallest encoding sum_k c_k 3^k.
  // Throws ConfigError for r out of range or a bad modulus.
  explicit Field(int r, std::optional<Poly3> modulus = std::nullopt);

  int exponent() const { return r_; }
  std::uint32_t size() const { return q_; }
  const Poly3& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  // Element with encoding `enc`; throws DomainError if enc >= q.
  FieldElement element(std::uint32_t enc) const;
  // Embedding of the prime-field value v mod 3.
  FieldElement from_int(long long v) const;
  FieldElement from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FieldElement x) const;

  // All q elements in enc order.
  std::vector<FieldElement> elements() const;
  // The q-1 nonzero elements in enc order.
  std::vector<FieldElement> units() const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
  FieldElement pow(FieldElement x, std::uint64_t e) const;
  // Scalar multiple by an integer (reduced mod 3).
  FieldElement scale(long long c, FieldElement x) const;

  // Absolute trace to GF(3), returned as 0, 1 or 2.
  int trace(FieldElement x) const { return trace_[x.enc]; }
  // x must be nonzero; true iff x is a square of a unit.
  bool is_square(FieldElement x) const;

  // Schoolbook product modulo the modulus, bypassing the log tables.
  FieldElement mul_reference(FieldElement x, FieldElement y) const;
  // Trace evaluated as x + x^3 + ... + x^(3^(r-1)), bypassing the table.
  int trace_reference(FieldElement x) const;

  std::string describe_modulus() const;

 private:
  int r_;
  std::uint32_t q_;
  Poly3 modulus_;
  std::vector<std::uint32_t> pow3_;
  std::vector<std::uint32_t> log_;  // log_[enc], undefined at 0
  std::vector<std::uint32_t> exp_;  // exp_[k] for k in [0, 2(q-1))
  std::vector<std::uint8_t> trace_;
};

// Polynomial helpers over GF(3), exposed for configuration checks and tests.
namespace poly3 {

std::uint64_t encode(const Poly3& p);
Poly3 decode(std::uint64_t enc);
int degree(const Poly3& p);
// True iff p has degree >= 1 and no monic factor of degree in [1, deg/2].
bool is_irreducible(const Poly3& p);
std::string to_string(const Poly3& p);

}  // namespace poly3

}  // namespace klc

template <>
struct std::hash<klc::FieldElement> {
  std::size_t operator()(klc::FieldElement x) const noexcept { return x.enc; }
};
