#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "klc/eisenstein.hpp"
#include "klc/field.hpp"

namespace klc {

// K(lambda; a) = sum over units alpha of lambda(alpha + a/alpha). Throws
// DomainError for a = 0 and InternalError if the sum is not a real integer or
// breaks the Weil bound |K| <= 2 sqrt(q).
long kloosterman(const Field& f, FieldElement a);
// Same sum after the substitution alpha -> a/alpha.
long kloosterman_reindexed(const Field& f, FieldElement a);

// K(lambda; a) for every a, indexed by enc (entry 0 unused).
class KloostermanTable {
 public:
  explicit KloostermanTable(const Field& f);
  long operator[](FieldElement a) const { return values_.at(a.enc); }
  const std::vector<long>& values() const { return values_; }

 private:
  std::vector<long> values_;
};

// GL(t, q) Kloosterman sum via the three-term recursion in t.
mpz_class kloosterman_gl(const Field& f, int t, FieldElement a);
// sum over w in GL(t, q) of lambda(Tr w + a Tr w^-1), by enumeration (t <= 2).
CycInt kloosterman_gl_direct(const Field& f, int t, FieldElement a);

enum class MomentFamily { MK, SK, T0SK, T12SK };
std::string_view to_string(MomentFamily fam);
MomentFamily parse_moment_family(std::string_view s);
inline constexpr std::array<MomentFamily, 4> kMomentFamilies = {MomentFamily::MK, MomentFamily::SK,
                                                                MomentFamily::T0SK, MomentFamily::T12SK};

// Power moments of Kloosterman sums, h = 0..hmax, by direct enumeration:
//   MK^h    = sum_{a != 0} K(a)^h
//   SK^h    = sum_{a nonzero square} K(a)^h
//   T0SK^h  = sum_{a != 0, tr a = 0} K(a^2)^h
//   T12SK^h = sum_{tr a != 0} K(a^2)^h
// All values are integers.
class MomentTable {
 public:
  MomentTable(std::uint32_t q, int hmax) : q_(q), hmax_(hmax) {}

  std::uint32_t q() const { return q_; }
  int hmax() const { return hmax_; }
  const mpz_class& get(MomentFamily fam, int h) const;
  void set(MomentFamily fam, int h, mpz_class v) { entries_[{fam, h}] = std::move(v); }
  const std::map<std::pair<MomentFamily, int>, mpz_class>& entries() const { return entries_; }

 private:
  std::uint32_t q_;
  int hmax_;
  std::map<std::pair<MomentFamily, int>, mpz_class> entries_;
};

MomentTable moments(const Field& f, int hmax);
MomentTable moments(const Field& f, const KloostermanTable& k, int hmax);

inline constexpr int kMaxBruteForceTuple = 4;

// delta(m, q; beta): number of m-tuples of units with sum (alpha_j + 1/alpha_j) = beta.
// delta(0, q; beta) = [beta == 0]. Brute force, m <= 4.
std::uint64_t delta(const Field& f, int m, FieldElement beta);
// delta(m, q; beta) for every beta in enc order from a single enumeration.
std::vector<std::uint64_t> delta_table(const Field& f, int m);
// delta(1, q; beta) from the square class of beta^2 - 1: 2, 1 or 0.
int delta1_closed_form(const Field& f, FieldElement beta);

// a_r = sum over nonsingular symmetric rr x rr matrices B and column vectors h
// of lambda(h^T B h). Brute force for rr <= 2.
CycInt a_r_sum(const Field& f, int rr);
mpz_class a_r_closed_form(std::uint32_t q, int rr);

struct SalieRow {
  int h;
  mpz_class lhs;  // MK^h
  mpz_class rhs;  // q^2 M_{h-1} - (q-1)^{h-1} + 2(-1)^{h-1}
  bool equal;
};
// M_h = #{units (alpha_1..alpha_h) : sum alpha_j = 1 = sum 1/alpha_j}, M_0 = 0.
std::uint64_t salie_count(const Field& f, int h);
std::vector<SalieRow> salie_check(const Field& f, int hmax);

struct PropERow {
  int m;
  FieldElement beta;
  CycInt lhs;     // sum_{a != 0} lambda(-a beta) K(a^2)^m
  mpz_class rhs;  // q delta(m, q; beta) - (q-1)^m
  bool equal;
};
std::vector<PropERow> prop_e_check(const Field& f, int mmax);

}  // namespace klc
