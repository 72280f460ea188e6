#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "klc/field.hpp"
#include "klc/groups.hpp"

namespace klc {

// The ternary code C(G) = {u in GF(3)^N : sum_j u_j Tr g_j = 0} of a group G,
// with coordinates in the canonical group order.
enum class CodeId { SO3, O3, SP2 };
std::string_view to_string(CodeId id);
CodeId parse_code_id(std::string_view s);  // "so3" | "o3" | "sp2"
GroupId group_of(CodeId id);

std::uint64_t code_length(std::uint32_t q, CodeId id);

// Traces Tr g_1, ..., Tr g_N of the group elements in canonical order: the
// parity-check vector v of the code.
class CodeData {
 public:
  CodeData(const Field& f, CodeId id);

  const Field& field() const { return *field_; }
  CodeId id() const { return id_; }
  std::uint64_t length() const { return traces_.size(); }
  // Dimension of the dual over GF(3), i.e. r.
  int dual_dimension() const { return field_->exponent(); }
  const std::vector<FieldElement>& traces() const { return traces_; }

 private:
  const Field* field_;
  CodeId id_;
  std::vector<FieldElement> traces_;
};

// c(a) = (tr(a Tr g_1), ..., tr(a Tr g_N)).
struct DualCodeword {
  FieldElement a;
  std::vector<std::uint8_t> coords;
  std::uint64_t weight() const;
};
DualCodeword dual_codeword(const CodeData& code, FieldElement a);

// True iff a -> c(a) is injective on GF(q).
bool dual_map_injective(const CodeData& code);

// Closed-form weight of c(a), a != 0:
//   w = (q i / 3) (2(q^2 - 1) - 2Re(lambda(a)) K(a^2)),  i = 1 for SO3, 2 for O3.
mpz_class dual_weight_formula(const Field& f, CodeId id, FieldElement a);

// Weight -> number of dual codewords, over all q codewords c(a).
struct DualSpectrum {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t at(std::uint64_t w) const;
  std::uint64_t total() const;
};
DualSpectrum dual_spectrum(const CodeData& code);

struct WeightDistribution {
  CodeId code;
  std::uint64_t length;
  std::vector<mpz_class> counts;  // indexed by weight j
  std::optional<std::uint64_t> truncated_at;

  const mpz_class& at(std::uint64_t j) const;
  mpz_class total() const;
};

inline constexpr std::uint64_t kMaxFullSpectrumLength = 2000;

// Counts codewords by weight from the multinomial formula
//   C_j = sum prod_beta C(n(beta); nu_beta, mu_beta)
// over {nu, mu} with sum (nu + mu) = j and sum (nu_beta - mu_beta) beta = 0,
// where n(beta) is the closed-form trace spectrum. Dynamic programming over
// (weight, running sum in GF(q)). With truncate_at = J only C_0..C_J are
// produced; without it the code length must be <= kMaxFullSpectrumLength.
WeightDistribution weight_distribution_dp(const Field& f, CodeId id, std::optional<std::uint64_t> truncate_at = {});

// Expands W_C(x, y) = (1/q) sum_a (x + 2y)^(N - w(c(a))) (x - y)^w(c(a)) from
// the enumerated dual spectrum. Throws InternalError when a coefficient is not
// divisible by q. Lengths above max_length throw ScaleError.
WeightDistribution weight_distribution_macwilliams(const CodeData& code,
                                                   std::uint64_t max_length = kMaxFullSpectrumLength);

// Coefficients of (1 + 2y)^(n - w) (1 - y)^w, by a three-term recurrence.
std::vector<mpz_class> macwilliams_kernel(std::uint64_t n, std::uint64_t w);

// Stirling number of the second kind, S(h, t) = 0 for t > h.
mpz_class stirling2(int h, int t);

struct PlessReport {
  CodeId code;
  int h;
  mpz_class lhs;  // sum_j j^h C_j
  mpz_class rhs;  // dual-side Stirling sum
  bool equal;
};
// sum_j j^h C_j = sum_{j <= min(N, h)} (-1)^j A_j sum_{t=j}^{h} t! S(h,t) 3^(k-t) 2^(t-j) C(N-j, N-t),
// with k = N - r and A the dual spectrum. Needs an untruncated distribution.
PlessReport pless_check(const WeightDistribution& dist, const DualSpectrum& dual, int r, int h);

// Draws random u with u . v = 0 (fixing one coordinate) and checks C_{w(u)} > 0.
bool membership_spot_check(const CodeData& code, const WeightDistribution& dist, int samples, std::uint64_t seed);

}  // namespace klc
