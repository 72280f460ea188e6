#include "klc/groups.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "klc/charsums.hpp"
#include "klc/errors.hpp"

namespace klc {

std::string_view to_string(GroupId id) {
  switch (id) {
    case GroupId::SO3:
      return "so3";
    case GroupId::O3:
      return "o3";
    case GroupId::SP2:
      return "sp2";
  }
  return "?";
}

GroupId parse_group_id(std::string_view s) {
  for (GroupId id : {GroupId::SO3, GroupId::O3, GroupId::SP2})
    if (to_string(id) == s) return id;
  throw ConfigError("unknown group '" + std::string(s) + "' (expected so3, o3 or sp2)");
}

namespace matrix {

SquareMatrix identity(int dim) {
  SquareMatrix m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.at(i, i) = {1};
  return m;
}

SquareMatrix from_rows(const Field& f, int dim, std::initializer_list<std::uint32_t> encs) {
  if (encs.size() != static_cast<std::size_t>(dim * dim)) throw DomainError("from_rows: wrong entry count");
  SquareMatrix m;
  m.dim = dim;
  std::size_t k = 0;
  for (std::uint32_t v : encs) m.e[k++] = f.element(v);
  return m;
}

SquareMatrix mul(const Field& f, const SquareMatrix& x, const SquareMatrix& y) {
  SquareMatrix out;
  out.dim = x.dim;
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) {
      FieldElement s = f.zero();
      for (int k = 0; k < x.dim; ++k) s = f.add(s, f.mul(x.at(i, k), y.at(k, j)));
      out.at(i, j) = s;
    }
  return out;
}

SquareMatrix transpose(const SquareMatrix& x) {
  SquareMatrix out;
  out.dim = x.dim;
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) out.at(i, j) = x.at(j, i);
  return out;
}

FieldElement det(const Field& f, const SquareMatrix& x) {
  if (x.dim == 2) return f.sub(f.mul(x.at(0, 0), x.at(1, 1)), f.mul(x.at(0, 1), x.at(1, 0)));
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(x.at(r0, c0), x.at(r1, c1)), f.mul(x.at(r0, c1), x.at(r1, c0)));
  };
  FieldElement d = f.mul(x.at(0, 0), minor(1, 2, 1, 2));
  d = f.sub(d, f.mul(x.at(0, 1), minor(1, 2, 0, 2)));
  return f.add(d, f.mul(x.at(0, 2), minor(1, 2, 0, 1)));
}

FieldElement trace(const Field& f, const SquareMatrix& x) {
  FieldElement s = f.zero();
  for (int i = 0; i < x.dim; ++i) s = f.add(s, x.at(i, i));
  return s;
}

}  // namespace matrix

namespace {

int dimension(GroupId id) { return id == GroupId::SP2 ? 2 : 3; }

// Q(3, q) element diag(A, 1/A, 1) * [[1, h^2, -h], [0, 1, 0], [0, h, 1]].
SquareMatrix q_element(const Field& f, FieldElement a, FieldElement h) {
  SquareMatrix diag = matrix::identity(3);
  diag.at(0, 0) = a;
  diag.at(1, 1) = f.inv(a);
  SquareMatrix unip = matrix::identity(3);
  unip.at(0, 1) = f.mul(h, h);
  unip.at(0, 2) = f.neg(h);
  unip.at(2, 1) = h;
  return matrix::mul(f, diag, unip);
}

SquareMatrix sigma(const Field& f, int r) {
  if (r == 0) return matrix::identity(3);
  return matrix::from_rows(f, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
}

SquareMatrix rho(const Field& f) {
  SquareMatrix m = matrix::identity(3);
  m.at(2, 2) = f.neg(f.one());
  return m;
}

std::vector<BruhatCell> cells(GroupId id) {
  if (id == GroupId::SO3) return {{0, false}, {1, true}};
  return {{0, false}, {1, false}, {0, true}, {1, true}};
}

void check_element(const Field& f, GroupId id, const SquareMatrix& m) {
  if (!satisfies_defining_relation(f, id, m))
    throw InternalError("enumeration of " + std::string(to_string(id)) +
                        " produced a matrix outside the group");
}

}  // namespace

SquareMatrix defining_form(const Field& f, GroupId id) {
  if (id == GroupId::SP2) return matrix::from_rows(f, 2, {0, 1, f.neg(f.one()).enc, 0});
  return sigma(f, 1);
}

bool satisfies_defining_relation(const Field& f, GroupId id, const SquareMatrix& m) {
  if (m.dim != dimension(id)) return false;
  const SquareMatrix j = defining_form(f, id);
  if (matrix::mul(f, matrix::mul(f, matrix::transpose(m), j), m) != j) return false;
  if (id == GroupId::SO3 || id == GroupId::SP2) return matrix::det(f, m) == f.one();
  return true;
}

std::uint64_t group_order(std::uint32_t q, GroupId id) {
  const std::uint64_t qq = q;
  const std::uint64_t base = qq * (qq * qq - 1);
  return id == GroupId::O3 ? 2 * base : base;
}

mpz_class q_binomial(std::uint32_t q, int n, int rr) {
  if (n < 0 || rr < 0 || rr > n) throw DomainError("q_binomial requires 0 <= rr <= n");
  mpz_class num = 1, den = 1;
  for (int j = 0; j < rr; ++j) {
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), q, static_cast<unsigned long>(n - j));
    mpz_ui_pow_ui(b.get_mpz_t(), q, static_cast<unsigned long>(rr - j));
    num *= a - 1;
    den *= b - 1;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw InternalError("q_binomial: inexact division");
  return num / den;
}

mpz_class coset_count(std::uint32_t q, int rr) {
  if (rr < 0 || rr > 1) throw DomainError("coset_count: rr must be 0 or 1 for O(3, q)");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), q, static_cast<unsigned long>(rr * (rr + 1) / 2));
  return p * q_binomial(q, 1, rr);
}

std::vector<FieldElement> coset_representatives(const Field& f, int rr) {
  if (rr < 0 || rr > 1) throw DomainError("coset_representatives: rr must be 0 or 1 for O(3, q)");
  if (rr == 0) return {f.zero()};
  return f.elements();
}

void for_each_group_element(const Field& f, GroupId id, const std::function<void(const GroupElement&)>& fn) {
  if (id == GroupId::SP2) {
    const auto all = f.elements();
    const FieldElement minus_one = f.neg(f.one());
    GroupElement g;
    g.matrix.dim = 2;
    auto emit = [&](FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
      g.matrix.e = {a, b, c, d};
      check_element(f, id, g.matrix);
      fn(g);
    };
    for (FieldElement a : all)
      for (FieldElement b : all)
        for (FieldElement c : all) {
          if (!a.is_zero()) {
            emit(a, b, c, f.div(f.add(f.one(), f.mul(b, c)), a));
          } else if (f.mul(b, c) == minus_one) {
            for (FieldElement d : all) emit(a, b, c, d);
          }
        }
    return;
  }

  const SquareMatrix rho_m = rho(f);
  GroupElement g;
  for (const BruhatCell& cell : cells(id)) {
    g.cell = cell;
    const SquareMatrix s = sigma(f, cell.r);
    const auto reps = coset_representatives(f, cell.r);
    std::vector<SquareMatrix> tails;
    tails.reserve(reps.size());
    for (FieldElement c : reps) tails.push_back(matrix::mul(f, s, q_element(f, f.one(), c)));
    for (FieldElement a : f.units())
      for (FieldElement h : f.elements()) {
        SquareMatrix head = q_element(f, a, h);
        if (cell.rho) head = matrix::mul(f, rho_m, head);
        for (const SquareMatrix& tail : tails) {
          g.matrix = matrix::mul(f, head, tail);
          check_element(f, id, g.matrix);
          fn(g);
        }
      }
  }
}

std::vector<GroupElement> enumerate_group(const Field& f, GroupId id) {
  const std::uint64_t order = group_order(f.size(), id);
  if (order > kMaxMaterializedOrder)
    throw ScaleError("enumerate_group: |" + std::string(to_string(id)) + "| = " + std::to_string(order) +
                     " exceeds the materialization bound; use for_each_group_element");
  std::vector<GroupElement> out;
  out.reserve(order);
  for_each_group_element(f, id, [&](const GroupElement& g) { out.push_back(g); });
  if (out.size() != order)
    throw InternalError("enumerate_group: produced " + std::to_string(out.size()) + " elements, expected " +
                        std::to_string(order));
  std::set<SquareMatrix> seen;
  for (const auto& g : out)
    if (!seen.insert(g.matrix).second) throw InternalError("enumerate_group: duplicate element");
  return out;
}

std::vector<SquareMatrix> brute_force_group(const Field& f, GroupId id) {
  const int dim = dimension(id);
  const int n = dim * dim;
  std::uint64_t total = 1;
  for (int k = 0; k < n; ++k) {
    total *= f.size();
    if (total > 50'000'000) throw ScaleError("brute_force_group: q^" + std::to_string(n) + " is too large");
  }
  std::vector<SquareMatrix> out;
  SquareMatrix m;
  m.dim = dim;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    // Last entry varies fastest, so the scan is in lexicographic entry order.
    for (int k = n - 1; k >= 0; --k, c /= f.size()) m.e[k] = {static_cast<std::uint32_t>(c % f.size())};
    if (satisfies_defining_relation(f, id, m)) out.push_back(m);
  }
  return out;
}

bool same_multiset(std::vector<SquareMatrix> x, std::vector<SquareMatrix> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool closure_spot_check(const Field& f, GroupId id, const std::vector<GroupElement>& elems, int pairs,
                        std::uint64_t seed) {
  if (elems.empty()) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int k = 0; k < pairs; ++k) {
    const auto& u = elems[pick(rng)].matrix;
    const auto& v = elems[pick(rng)].matrix;
    if (!satisfies_defining_relation(f, id, matrix::mul(f, u, v))) return false;
  }
  return true;
}

std::uint64_t TraceSpectrum::total() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

bool TraceSpectrum::all_positive() const {
  return std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; });
}

TraceSpectrum trace_spectrum_enumerated(const Field& f, GroupId id) {
  TraceSpectrum s{std::vector<std::uint64_t>(f.size(), 0)};
  for_each_group_element(f, id, [&](const GroupElement& g) { ++s.counts[matrix::trace(f, g.matrix).enc]; });
  return s;
}

TraceSpectrum trace_spectrum_from(const Field& f, const std::vector<GroupElement>& elems) {
  TraceSpectrum s{std::vector<std::uint64_t>(f.size(), 0)};
  for (const auto& g : elems) ++s.counts[matrix::trace(f, g.matrix).enc];
  return s;
}

TraceSpectrum trace_spectrum_closed_form(const Field& f, GroupId id) {
  const std::uint64_t q = f.size();
  TraceSpectrum s{std::vector<std::uint64_t>(q, 0)};
  for (FieldElement beta : f.elements()) {
    const std::uint64_t dm = delta1_closed_form(f, f.sub(beta, f.one()));
    const std::uint64_t dp = delta1_closed_form(f, f.add(beta, f.one()));
    const std::uint64_t d0 = delta1_closed_form(f, beta);
    switch (id) {
      case GroupId::SO3:
        s.counts[beta.enc] = q * q - q + q * dm;
        break;
      case GroupId::O3:
        s.counts[beta.enc] = 2 * q * q - 2 * q + q * dm + q * dp;
        break;
      case GroupId::SP2:
        s.counts[beta.enc] = q * q - q + q * d0;
        break;
    }
  }
  return s;
}

SpectrumReport trace_spectrum(const Field& f, GroupId id) {
  SpectrumReport rep{id, trace_spectrum_enumerated(f, id), trace_spectrum_closed_form(f, id), false, false};
  rep.agree = rep.enumerated == rep.closed_form;
  rep.all_positive = rep.enumerated.all_positive();
  return rep;
}

CycInt gauss_sum_closed_form(const Field& f, GroupId id, FieldElement a) {
  if (a.is_zero()) throw DomainError("gauss_sum: a must be nonzero");
  const mpz_class qk = mpz_class(f.size()) * kloosterman(f, f.mul(a, a));
  switch (id) {
    case GroupId::SO3:
      return lambda_char(f, a) * CycInt(qk);
    case GroupId::O3:
      return CycInt(two_re(lambda_char(f, a)) * qk);
    case GroupId::SP2:
      return CycInt(qk);
  }
  return {};
}

GaussSumReport gauss_sum(const Field& f, GroupId id, FieldElement a, const TraceSpectrum& spectrum) {
  if (a.is_zero()) throw DomainError("gauss_sum: a must be nonzero");
  std::array<mpz_class, 3> by_trace{0, 0, 0};
  for (FieldElement beta : f.elements())
    by_trace[f.trace(f.mul(a, beta))] += mpz_class(std::to_string(spectrum.counts.at(beta.enc)));
  GaussSumReport rep{id, a, CycInt::from_root_counts(by_trace[0], by_trace[1], by_trace[2]),
                     gauss_sum_closed_form(f, id, a), false};
  rep.equal = rep.from_spectrum == rep.closed_form;
  return rep;
}

GaussSumReport gauss_sum(const Field& f, GroupId id, FieldElement a) {
  return gauss_sum(f, id, a, trace_spectrum_enumerated(f, id));
}

}  // namespace klc
