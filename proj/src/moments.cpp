#include "klc/moments.hpp"

#include <algorithm>
#include <cstdio>

#include "klc/errors.hpp"

namespace klc {

namespace {

constexpr const char* kA2Note = "first sum uses 2^-j";

mpz_class binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// base^e for any integer e.
mpq_class pow_q(unsigned long base, long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return mpq_class(p);
  mpq_class r(1, p);
  r.canonicalize();
  return r;
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

RecursionReport new_report(std::string theorem, std::uint32_t q, int h, std::string quantity) {
  RecursionReport rep;
  rep.theorem = std::move(theorem);
  rep.q = q;
  rep.h = h;
  rep.quantity = std::move(quantity);
  return rep;
}

int sign(std::uint64_t j) { return j % 2 == 0 ? 1 : -1; }

// (-1)^(j+1) + 2^-j
mpq_class t12_coefficient(int j) { return mpq_class(j % 2 == 0 ? -1 : 1) + pow_q(2, -j); }

void require_spectrum(const WeightDistribution& d, std::uint64_t upto, const char* who) {
  if (d.counts.size() <= std::min(upto, d.length))
    throw DomainError(std::string(who) + ": weight distribution of the " + std::string(to_string(d.code)) +
                      " code covers j <= " + std::to_string(d.counts.size() - 1) + ", need j <= " +
                      std::to_string(upto));
}

std::string digest(std::initializer_list<std::pair<const WeightDistribution*, std::uint64_t>> parts,
                   const char* moment, int hmax) {
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
  };
  std::string label;
  for (const auto& [d, upto] : parts) {
    const std::uint64_t top = std::min(upto, d->length);
    label += std::string(to_string(d->code)) + "[0.." + std::to_string(top) + "] ";
    for (std::uint64_t j = 0; j <= top; ++j) mix(std::to_string(j) + ":" + d->counts[j].get_str() + ";");
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return label + moment + "[1.." + std::to_string(hmax) + "] fnv1a:" + hex;
}

// q^(1-h) * sum_j (-1)^j dist_j * stirling_kernel(h, j, N, e3, e2(j))
template <class E2>
mpq_class spectrum_term(const WeightDistribution& dist, std::uint32_t q, int h, long e3, E2 e2) {
  mpq_class acc = 0;
  for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(dist.length, h); ++j) {
    if (sgn(dist.counts[j]) == 0) continue;
    acc += mpq_class(sign(j) * dist.counts[j]) * stirling_kernel(h, j, dist.length, e3, e2(j));
  }
  return acc * pow_q(q, 1 - h);
}

mpq_class t12_history(std::uint32_t q, int h, const std::vector<mpq_class>& t12) {
  const mpz_class q2m1 = mpz_class(q) * q - 1;
  mpq_class s = 0;
  for (int j = 1; j < h; ++j) s += t12_coefficient(j) * mpq_class(binom(h, j) * pow_z(q2m1, h - j)) * t12[j];
  return s;
}

std::vector<mpq_class> t12_column(const MomentTable& table, int hmax) {
  std::vector<mpq_class> v(hmax + 1);
  for (int j = 1; j <= hmax; ++j) v[j] = mpq_class(table.get(MomentFamily::T12SK, j));
  return v;
}

mpq_class a1_spectrum_side(std::uint32_t q, int h, const WeightDistribution& so3, const WeightDistribution& sp2) {
  auto e2 = [h](std::uint64_t j) { return -static_cast<long>(h) - static_cast<long>(j); };
  return spectrum_term(so3, q, h, h, e2) - spectrum_term(sp2, q, h, h, e2);
}

}  // namespace

CodeSpectra code_spectra_dp(const Field& f, std::optional<std::uint64_t> jmax) {
  return {weight_distribution_dp(f, CodeId::SO3, jmax), weight_distribution_dp(f, CodeId::O3, jmax),
          weight_distribution_dp(f, CodeId::SP2, jmax)};
}

mpq_class stirling_kernel(int h, std::uint64_t j, std::uint64_t n, long e3, long e2) {
  mpq_class s = 0;
  for (std::uint64_t t = j; t <= static_cast<std::uint64_t>(h); ++t) {
    if (t > n) break;
    const long tl = static_cast<long>(t);
    s += mpq_class(factorial(t) * stirling2(h, static_cast<int>(t)) * binom(n - j, n - t)) * pow_q(3, e3 - tl) *
         pow_q(2, tl + e2);
  }
  return s;
}

std::vector<RecursionReport> theorem_a1(const Field& f, const MomentTable& table, const WeightDistribution& so3,
                                        const WeightDistribution& sp2, int hmax) {
  require_spectrum(so3, hmax, "theorem_a1");
  require_spectrum(sp2, hmax, "theorem_a1");
  const std::uint32_t q = f.size();
  const auto t12 = t12_column(table, hmax);
  const std::string dig = digest({{&so3, hmax}, {&sp2, hmax}}, "T12SK", hmax);
  std::vector<RecursionReport> out;
  for (int h = 1; h <= hmax; ++h) {
    RecursionReport rep = new_report("theorem-a1", q, h, "T12SK");
    rep.lhs = t12_coefficient(h) * t12[h];
    rep.rhs = -t12_history(q, h, t12) + a1_spectrum_side(q, h, so3, sp2);
    rep.equal = rep.lhs == rep.rhs;
    rep.inputs_digest = dig;
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<RecursionReport> theorem_a2(const Field& f, const MomentTable& table, const WeightDistribution& o3,
                                        const WeightDistribution& sp2, int hmax) {
  require_spectrum(o3, hmax, "theorem_a2");
  require_spectrum(sp2, hmax, "theorem_a2");
  const std::uint32_t q = f.size();
  const auto t12 = t12_column(table, hmax);
  const std::string dig = digest({{&o3, hmax}, {&sp2, hmax}}, "T12SK", hmax);
  std::vector<RecursionReport> out;
  for (int h = 1; h <= hmax; ++h) {
    RecursionReport rep = new_report("theorem-a2", q, h, "T12SK");
    rep.lhs = t12_coefficient(h) * t12[h];
    const mpq_class o3_side =
        spectrum_term(o3, q, h, h, [h](std::uint64_t j) { return -2L * h - static_cast<long>(j); });
    const mpq_class sp2_side =
        spectrum_term(sp2, q, h, h, [h](std::uint64_t j) { return -static_cast<long>(h) - static_cast<long>(j); });
    rep.rhs = -t12_history(q, h, t12) + o3_side - sp2_side;
    rep.equal = rep.lhs == rep.rhs;
    rep.inputs_digest = dig;
    rep.note = kA2Note;
    out.push_back(std::move(rep));
  }
  return out;
}

namespace {

mpq_class sk_binomial_sum(std::uint32_t q, int h, const std::vector<mpq_class>& sk, int upto) {
  const mpz_class q2m1 = mpz_class(q) * q - 1;
  mpq_class s = 0;
  for (int j = 0; j <= upto; ++j) s += mpq_class(sign(j) * binom(h, j) * pow_z(q2m1, h - j)) * sk[j];
  return s;
}

mpq_class sp2_side_l(std::uint32_t q, int h, const WeightDistribution& sp2) {
  // q^(1-h) factor of spectrum_term is undone: the Sp(2,q) relation carries a plain q.
  return spectrum_term(sp2, q, h, 0, [](std::uint64_t j) { return -static_cast<long>(j); }) * pow_q(q, h);
}

mpq_class l_prefactor(std::uint32_t q, int h) { return 2 * pow_q(2 * q, h) * pow_q(3, -h); }

}  // namespace

std::vector<RecursionReport> theorem_l(const Field& f, const MomentTable& table, const WeightDistribution& sp2,
                                       int hmax) {
  require_spectrum(sp2, hmax, "theorem_l");
  const std::uint32_t q = f.size();
  std::vector<mpq_class> sk(hmax + 1);
  for (int j = 0; j <= hmax; ++j) sk[j] = mpq_class(table.get(MomentFamily::SK, j));
  const std::string dig = digest({{&sp2, hmax}}, "SK", hmax);
  std::vector<RecursionReport> out;
  for (int h = 1; h <= hmax; ++h) {
    RecursionReport rep = new_report("theorem-l", q, h, "SK");
    rep.lhs = l_prefactor(q, h) * sk_binomial_sum(q, h, sk, h);
    rep.rhs = sp2_side_l(q, h, sp2);
    rep.equal = rep.lhs == rep.rhs;
    rep.inputs_digest = dig;
    out.push_back(std::move(rep));
  }
  return out;
}

mpq_class solve_sk(const Field& f, const std::vector<mpq_class>& sk_lower, const WeightDistribution& sp2, int h) {
  if (h < 1 || sk_lower.size() < static_cast<std::size_t>(h))
    throw DomainError("solve_sk: need SK^0..SK^(h-1)");
  require_spectrum(sp2, h, "solve_sk");
  const std::uint32_t q = f.size();
  const mpq_class known = sk_binomial_sum(q, h, sk_lower, h - 1);
  const mpq_class total = sp2_side_l(q, h, sp2) / l_prefactor(q, h);
  return mpq_class(sign(h)) * (total - known);
}

std::vector<mpq_class> predict_t12sk(const Field& f, const WeightDistribution& so3, const WeightDistribution& sp2,
                                     int hmax) {
  require_spectrum(so3, hmax, "predict_t12sk");
  require_spectrum(sp2, hmax, "predict_t12sk");
  const std::uint32_t q = f.size();
  std::vector<mpq_class> t12(hmax + 1);
  for (int h = 1; h <= hmax; ++h)
    t12[h] = (-t12_history(q, h, t12) + a1_spectrum_side(q, h, so3, sp2)) / t12_coefficient(h);
  return t12;
}

std::vector<RecursionReport> corollary_n(const Field& f, const MomentTable& table) {
  const std::uint32_t q = f.size();
  const mpq_class sq = mpq_class(f.exponent() % 2 == 0 ? 1 : -1) * q;
  struct Row {
    MomentFamily fam;
    mpq_class closed;
  };
  const Row rows[] = {
      {MomentFamily::SK, (sq + 1) / 2},
      {MomentFamily::T0SK, sq / 3 + 1},
      {MomentFamily::T12SK, 2 * sq / 3},
  };
  std::vector<RecursionReport> out;
  for (const Row& row : rows) {
    RecursionReport rep = new_report("corollary-n", q, 1, std::string(to_string(row.fam)));
    rep.lhs = row.closed;
    rep.lhs.canonicalize();
    rep.rhs = mpq_class(table.get(row.fam, 1));
    rep.equal = rep.lhs == rep.rhs;
    rep.inputs_digest = "enumerated first moments";
    out.push_back(std::move(rep));
  }
  return out;
}

bool all_equal(const std::vector<RecursionReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const RecursionReport& r) { return r.equal; });
}

}  // namespace klc
