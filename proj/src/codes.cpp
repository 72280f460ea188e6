#include "klc/codes.hpp"

#include <random>
#include <set>

#include "klc/charsums.hpp"
#include "klc/eisenstein.hpp"
#include "klc/errors.hpp"

namespace klc {

namespace {

mpz_class binom(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pow_ui(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class from_u64(std::uint64_t v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace

std::string_view to_string(CodeId id) { return to_string(group_of(id)); }

CodeId parse_code_id(std::string_view s) {
  switch (parse_group_id(s)) {
    case GroupId::SO3:
      return CodeId::SO3;
    case GroupId::O3:
      return CodeId::O3;
    case GroupId::SP2:
      return CodeId::SP2;
  }
  return CodeId::SO3;
}

GroupId group_of(CodeId id) {
  switch (id) {
    case CodeId::SO3:
      return GroupId::SO3;
    case CodeId::O3:
      return GroupId::O3;
    case CodeId::SP2:
      return GroupId::SP2;
  }
  return GroupId::SO3;
}

std::uint64_t code_length(std::uint32_t q, CodeId id) { return group_order(q, group_of(id)); }

CodeData::CodeData(const Field& f, CodeId id) : field_(&f), id_(id) {
  traces_.reserve(code_length(f.size(), id));
  for_each_group_element(f, group_of(id),
                         [&](const GroupElement& g) { traces_.push_back(matrix::trace(f, g.matrix)); });
}

std::uint64_t DualCodeword::weight() const {
  std::uint64_t w = 0;
  for (auto c : coords) w += c != 0;
  return w;
}

DualCodeword dual_codeword(const CodeData& code, FieldElement a) {
  const Field& f = code.field();
  DualCodeword c{a, {}};
  c.coords.reserve(code.length());
  for (FieldElement t : code.traces()) c.coords.push_back(static_cast<std::uint8_t>(f.trace(f.mul(a, t))));
  return c;
}

bool dual_map_injective(const CodeData& code) {
  std::set<std::vector<std::uint8_t>> seen;
  for (FieldElement a : code.field().elements())
    if (!seen.insert(dual_codeword(code, a).coords).second) return false;
  return true;
}

mpz_class dual_weight_formula(const Field& f, CodeId id, FieldElement a) {
  if (a.is_zero()) throw DomainError("dual_weight_formula: a must be nonzero");
  if (id == CodeId::SP2) throw DomainError("dual_weight_formula covers the SO3 and O3 codes only");
  const long i = id == CodeId::SO3 ? 1 : 2;
  const mpz_class q = f.size();
  const mpz_class k = kloosterman(f, f.mul(a, a));
  const mpz_class num = q * i * (2 * (q * q - 1) - two_re(lambda_char(f, a)) * k);
  if (!mpz_divisible_ui_p(num.get_mpz_t(), 3)) throw InternalError("dual_weight_formula: weight not integral");
  return num / 3;
}

std::uint64_t DualSpectrum::at(std::uint64_t w) const {
  const auto it = counts.find(w);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t DualSpectrum::total() const {
  std::uint64_t s = 0;
  for (const auto& [w, c] : counts) s += c;
  return s;
}

DualSpectrum dual_spectrum(const CodeData& code) {
  DualSpectrum s;
  for (FieldElement a : code.field().elements()) ++s.counts[dual_codeword(code, a).weight()];
  return s;
}

const mpz_class& WeightDistribution::at(std::uint64_t j) const {
  if (j >= counts.size())
    throw DomainError("weight " + std::to_string(j) + " not covered by this distribution");
  return counts[j];
}

mpz_class WeightDistribution::total() const {
  mpz_class s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

WeightDistribution weight_distribution_dp(const Field& f, CodeId id, std::optional<std::uint64_t> truncate_at) {
  const std::uint64_t n_total = code_length(f.size(), id);
  if (!truncate_at && n_total > kMaxFullSpectrumLength)
    throw ScaleError("weight_distribution_dp: full spectrum of length " + std::to_string(n_total) +
                     " exceeds " + std::to_string(kMaxFullSpectrumLength) + "; pass a truncation");
  const std::uint64_t jmax = truncate_at ? std::min(*truncate_at, n_total) : n_total;
  const std::size_t q = f.size();
  const TraceSpectrum spectrum = trace_spectrum_closed_form(f, group_of(id));

  std::vector<mpz_class> dp((jmax + 1) * q);
  dp[0] = 1;
  std::uint64_t deg = 0;
  std::vector<mpz_class> next(dp.size());
  for (FieldElement beta : f.elements()) {
    const std::uint64_t n = spectrum.counts[beta.enc];
    const std::uint64_t kmax = std::min(n, jmax);
    // trans[k][d]: ways to put nonzero symbols on k of the n positions with
    // trace beta such that (#1s - #2s) = d mod 3.
    std::vector<std::array<mpz_class, 3>> trans(kmax + 1);
    for (std::uint64_t k = 0; k <= kmax; ++k) {
      std::array<mpz_class, 3> by_d{0, 0, 0};
      for (std::uint64_t ones = 0; ones <= k; ++ones)
        by_d[(2 * ones + 2 * k) % 3] += binom(k, ones);  // ones - (k - ones) mod 3
      const mpz_class choose = binom(n, k);
      for (int d = 0; d < 3; ++d) trans[k][d] = choose * by_d[d];
    }
    std::array<std::vector<std::size_t>, 3> shift;
    for (int d = 0; d < 3; ++d) {
      shift[d].resize(q);
      const FieldElement step = f.scale(d, beta);
      for (std::size_t s = 0; s < q; ++s) shift[d][s] = f.add({static_cast<std::uint32_t>(s)}, step).enc;
    }

    const std::uint64_t new_deg = std::min(deg + kmax, jmax);
    for (std::uint64_t i = 0; i <= new_deg * q + q - 1; ++i) next[i] = 0;
    for (std::uint64_t w = 0; w <= deg; ++w)
      for (std::size_t s = 0; s < q; ++s) {
        const mpz_class& cur = dp[w * q + s];
        if (sgn(cur) == 0) continue;
        for (std::uint64_t k = 0; k <= kmax && w + k <= jmax; ++k)
          for (int d = 0; d < 3; ++d) {
            if (sgn(trans[k][d]) == 0) continue;
            mpz_addmul(next[(w + k) * q + shift[d][s]].get_mpz_t(), cur.get_mpz_t(), trans[k][d].get_mpz_t());
          }
      }
    std::swap(dp, next);
    deg = new_deg;
  }

  WeightDistribution dist{id, n_total, std::vector<mpz_class>(jmax + 1), {}};
  if (truncate_at) dist.truncated_at = jmax;
  for (std::uint64_t j = 0; j <= jmax; ++j) dist.counts[j] = dp[j * q];
  return dist;
}

std::vector<mpz_class> macwilliams_kernel(std::uint64_t n, std::uint64_t w) {
  if (w > n) throw DomainError("macwilliams_kernel: weight exceeds length");
  // P = (1+2y)^(n-w) (1-y)^w satisfies (1 + y - 2y^2) P' = ((2n - 3w) - 2n y) P, so
  // (j+1) p_{j+1} = (2n - 3w - j) p_j + (2(j-1) - 2n) p_{j-1}.
  std::vector<mpz_class> p(n + 1);
  p[0] = 1;
  const mpz_class n2 = from_u64(2 * n);
  const mpz_class lead = n2 - from_u64(3 * w);
  for (std::uint64_t j = 0; j < n; ++j) {
    mpz_class v = (lead - from_u64(j)) * p[j];
    if (j >= 1) v += (from_u64(2 * (j - 1)) - n2) * p[j - 1];
    if (!mpz_divisible_ui_p(v.get_mpz_t(), j + 1)) throw InternalError("macwilliams_kernel: inexact recurrence");
    mpz_divexact_ui(p[j + 1].get_mpz_t(), v.get_mpz_t(), j + 1);
  }
  return p;
}

WeightDistribution weight_distribution_macwilliams(const CodeData& code, std::uint64_t max_length) {
  const std::uint64_t n = code.length();
  if (n > max_length)
    throw ScaleError("weight_distribution_macwilliams: length " + std::to_string(n) + " exceeds " +
                     std::to_string(max_length));
  const DualSpectrum dual = dual_spectrum(code);
  std::vector<mpz_class> sum(n + 1, 0);
  for (const auto& [w, mult] : dual.counts) {
    const auto kernel = macwilliams_kernel(n, w);
    const mpz_class m = from_u64(mult);
    for (std::uint64_t j = 0; j <= n; ++j) mpz_addmul(sum[j].get_mpz_t(), kernel[j].get_mpz_t(), m.get_mpz_t());
  }
  WeightDistribution dist{code.id(), n, std::vector<mpz_class>(n + 1), {}};
  const unsigned long q = code.field().size();
  for (std::uint64_t j = 0; j <= n; ++j) {
    if (!mpz_divisible_ui_p(sum[j].get_mpz_t(), q))
      throw InternalError("MacWilliams coefficient of weight " + std::to_string(j) + " not divisible by q");
    mpz_divexact_ui(dist.counts[j].get_mpz_t(), sum[j].get_mpz_t(), q);
  }
  return dist;
}

mpz_class stirling2(int h, int t) {
  if (h < 0 || t < 0) throw DomainError("stirling2: negative argument");
  if (t > h) return 0;
  mpz_class s = 0;
  for (int j = 0; j <= t; ++j) {
    mpz_class term = binom(t, j) * pow_ui(j, h);  // 0^0 = 1
    if ((t - j) % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s / factorial(t);
}

PlessReport pless_check(const WeightDistribution& dist, const DualSpectrum& dual, int r, int h) {
  if (dist.truncated_at) throw DomainError("pless_check needs an untruncated weight distribution");
  if (h < 0) throw DomainError("pless_check: h must be nonnegative");
  const std::uint64_t n = dist.length;
  const std::uint64_t k = n - r;
  PlessReport rep{dist.code, h, 0, 0, false};
  for (std::uint64_t j = 0; j <= n; ++j) rep.lhs += pow_ui(j, h) * dist.counts[j];
  for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(n, h); ++j) {
    const std::uint64_t a = dual.at(j);
    if (a == 0) continue;
    mpz_class inner = 0;
    for (std::uint64_t t = j; t <= static_cast<std::uint64_t>(h); ++t)
      inner += factorial(t) * stirling2(h, t) * pow_ui(3, k - t) * pow_ui(2, t - j) * binom(n - j, n - t);
    if (j % 2 == 0)
      rep.rhs += from_u64(a) * inner;
    else
      rep.rhs -= from_u64(a) * inner;
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

bool membership_spot_check(const CodeData& code, const WeightDistribution& dist, int samples, std::uint64_t seed) {
  const Field& f = code.field();
  const auto& v = code.traces();
  std::vector<std::vector<std::size_t>> by_trace(f.size());
  for (std::size_t j = 0; j < v.size(); ++j) by_trace[v[j].enc].push_back(j);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> symbol(0, 2);
  std::vector<std::uint8_t> u(v.size());
  for (int k = 0; k < samples; ++k) {
    FieldElement s = f.zero();
    for (std::size_t j = 0; j < v.size(); ++j) {
      u[j] = static_cast<std::uint8_t>(symbol(rng));
      s = f.add(s, f.scale(u[j], v[j]));
    }
    if (!s.is_zero()) {
      const auto& slots = by_trace[f.neg(s).enc];
      if (slots.empty()) return false;
      const std::size_t j = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
      u[j] = static_cast<std::uint8_t>((u[j] + 1) % 3);
    }
    std::uint64_t w = 0;
    for (auto c : u) w += c != 0;
    if (w >= dist.counts.size()) continue;
    if (sgn(dist.counts[w]) == 0) return false;
  }
  return true;
}

}  // namespace klc
