#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "klc/charsums.hpp"
#include "klc/codes.hpp"
#include "klc/field.hpp"

namespace klc {

// Result of evaluating one power-moment recursion at a single (q, h).
// lhs and rhs are exact rationals; equal <=> lhs == rhs.
struct RecursionReport {
  std::string theorem;  // "theorem-a1", "theorem-a2", "theorem-l", "corollary-n"
  std::uint32_t q = 0;
  int h = 0;
  std::string quantity;  // which identity / moment the row checks
  mpq_class lhs;
  mpq_class rhs;
  bool equal = false;
  std::string inputs_digest;
  std::string note;
};

// Weight distributions of the three codes, C_0..C_J for J = jmax (or full).
struct CodeSpectra {
  WeightDistribution so3;
  WeightDistribution o3;
  WeightDistribution sp2;
};
CodeSpectra code_spectra_dp(const Field& f, std::optional<std::uint64_t> jmax);

// sum_{t=j}^{h} t! S(h,t) 3^(e3 - t) 2^(t + e2) C(N-j, N-t)
mpq_class stirling_kernel(int h, std::uint64_t j, std::uint64_t n, long e3, long e2);

// T12SK recursion obtained from the SO(3,q) code:
//   ((-1)^(h+1) + 2^-h) T12SK^h
//     = -sum_{j=1}^{h-1} ((-1)^(j+1) + 2^-j) C(h,j) (q^2-1)^(h-j) T12SK^j
//       + q^(1-h) sum_{j} (-1)^j (C_{1,j} - Chat_j) sum_t t! S(h,t) 3^(h-t) 2^(t-h-j) C(N1-j, N1-t)
// T12SK^j on the right comes from `table`.
std::vector<RecursionReport> theorem_a1(const Field& f, const MomentTable& table, const WeightDistribution& so3,
                                        const WeightDistribution& sp2, int hmax);

// Same recursion from the O(3,q) code (2^-j in the first sum):
//   ... + q^(1-h) sum_j (-1)^j C_{2,j} sum_t t! S(h,t) 3^(h-t) 2^(t-2h-j) C(N2-j, N2-t)
//       - q^(1-h) sum_j (-1)^j Chat_j sum_t t! S(h,t) 3^(h-t) 2^(t-h-j) C(N1-j, N1-t)
std::vector<RecursionReport> theorem_a2(const Field& f, const MomentTable& table, const WeightDistribution& o3,
                                        const WeightDistribution& sp2, int hmax);

// SK recursion from the Sp(2,q) code:
//   2 (2q/3)^h sum_{j=0}^{h} (-1)^j C(h,j) (q^2-1)^(h-j) SK^j
//     = q sum_j (-1)^j Chat_j sum_t t! S(h,t) 3^-t 2^(t-j) C(N1-j, N1-t)
std::vector<RecursionReport> theorem_l(const Field& f, const MomentTable& table, const WeightDistribution& sp2,
                                       int hmax);

// Solves the Sp(2,q) relation for SK^h given SK^0..SK^(h-1).
mpq_class solve_sk(const Field& f, const std::vector<mpq_class>& sk_lower, const WeightDistribution& sp2, int h);

// Computes T12SK^1..T12SK^hmax from the SO(3,q) and Sp(2,q) spectra alone,
// feeding each predicted value back into the next order. Indexed by h; entry 0 is unused.
std::vector<mpq_class> predict_t12sk(const Field& f, const WeightDistribution& so3, const WeightDistribution& sp2,
                                     int hmax);

// First moments in closed form against the enumerated table:
//   SK = ((-1)^r q + 1) / 2,  T0SK = (-1)^r q / 3 + 1,  T12SK = 2 (-1)^r q / 3.
std::vector<RecursionReport> corollary_n(const Field& f, const MomentTable& table);

bool all_equal(const std::vector<RecursionReport>& reports);

}  // namespace klc
