#include "klc/charsums.hpp"

#include <cmath>

#include "klc/errors.hpp"

namespace klc {

namespace {

void require_nonzero(FieldElement a, const char* what) {
  if (a.is_zero()) throw DomainError(std::string(what) + ": argument a must be nonzero");
}

long checked_kloosterman(const Field& f, const CharacterAccumulator& acc, FieldElement a) {
  const long k = acc.value().to_long();
  if (static_cast<long long>(k) * k > 4LL * f.size())
    throw InternalError("Weil bound violated: K(" + std::to_string(a.enc) + ") = " + std::to_string(k));
  return k;
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Visits every m-tuple of units as an index tuple into f.units().
template <class Fn>
void for_each_unit_tuple(const Field& f, int m, Fn&& fn) {
  const auto units = f.units();
  std::vector<std::size_t> idx(m, 0);
  for (;;) {
    fn(idx, units);
    int k = m - 1;
    while (k >= 0 && ++idx[k] == units.size()) idx[k--] = 0;
    if (k < 0) return;
  }
}

}  // namespace

long kloosterman(const Field& f, FieldElement a) {
  require_nonzero(a, "kloosterman");
  CharacterAccumulator acc;
  for (FieldElement alpha : f.units()) acc.add(f, f.add(alpha, f.mul(a, f.inv(alpha))));
  return checked_kloosterman(f, acc, a);
}

long kloosterman_reindexed(const Field& f, FieldElement a) {
  require_nonzero(a, "kloosterman");
  CharacterAccumulator acc;
  for (FieldElement beta : f.units()) {
    const FieldElement alpha = f.mul(a, f.inv(beta));
    acc.add(f, f.add(alpha, f.mul(a, f.inv(alpha))));
  }
  return checked_kloosterman(f, acc, a);
}

KloostermanTable::KloostermanTable(const Field& f) : values_(f.size(), 0) {
  for (FieldElement a : f.units()) values_[a.enc] = kloosterman(f, a);
}

mpz_class kloosterman_gl(const Field& f, int t, FieldElement a) {
  if (t < 0) throw DomainError("kloosterman_gl: t must be nonnegative");
  require_nonzero(a, "kloosterman_gl");
  const mpz_class q = f.size();
  const mpz_class k1 = kloosterman(f, a);
  mpz_class prev = 1;  // K_GL(0)
  if (t == 0) return prev;
  mpz_class cur = k1;
  for (int s = 2; s <= t; ++s) {
    mpz_class next = pow_z(q, s - 1) * cur * k1 + pow_z(q, 2 * s - 2) * (pow_z(q, s - 1) - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CycInt kloosterman_gl_direct(const Field& f, int t, FieldElement a) {
  require_nonzero(a, "kloosterman_gl_direct");
  if (t < 0) throw DomainError("kloosterman_gl_direct: t must be nonnegative");
  if (t > 2) throw ScaleError("kloosterman_gl_direct enumerates GL(t, q) only for t <= 2");
  CharacterAccumulator acc;
  if (t == 0) {
    acc.add_trace(0);
  } else if (t == 1) {
    for (FieldElement w : f.units()) acc.add(f, f.add(w, f.mul(a, f.inv(w))));
  } else {
    const auto all = f.elements();
    for (FieldElement x : all)
      for (FieldElement y : all)
        for (FieldElement z : all)
          for (FieldElement u : all) {
            const FieldElement det = f.sub(f.mul(x, u), f.mul(y, z));
            if (det.is_zero()) continue;
            const FieldElement tr = f.add(x, u);
            // Tr w^-1 = (x + u) / det for a 2x2 matrix.
            acc.add(f, f.add(tr, f.mul(a, f.div(tr, det))));
          }
  }
  return acc.value();
}

std::string_view to_string(MomentFamily fam) {
  switch (fam) {
    case MomentFamily::MK:
      return "MK";
    case MomentFamily::SK:
      return "SK";
    case MomentFamily::T0SK:
      return "T0SK";
    case MomentFamily::T12SK:
      return "T12SK";
  }
  return "?";
}

MomentFamily parse_moment_family(std::string_view s) {
  for (MomentFamily fam : kMomentFamilies)
    if (to_string(fam) == s) return fam;
  throw ConfigError("unknown moment family '" + std::string(s) + "'");
}

const mpz_class& MomentTable::get(MomentFamily fam, int h) const {
  const auto it = entries_.find({fam, h});
  if (it == entries_.end())
    throw DomainError("moment " + std::string(to_string(fam)) + "^" + std::to_string(h) + " not tabulated");
  return it->second;
}

MomentTable moments(const Field& f, int hmax) { return moments(f, KloostermanTable(f), hmax); }

MomentTable moments(const Field& f, const KloostermanTable& k, int hmax) {
  if (hmax < 0) throw DomainError("moments: hmax must be nonnegative");
  MomentTable table(f.size(), hmax);
  for (int h = 0; h <= hmax; ++h) {
    mpz_class mk = 0, sk = 0, t0 = 0, t12 = 0;
    for (FieldElement a : f.units()) {
      const mpz_class ka = pow_z(k[a], h);
      mk += ka;
      if (f.is_square(a)) sk += ka;
      const mpz_class ka2 = pow_z(k[f.mul(a, a)], h);
      if (f.trace(a) == 0)
        t0 += ka2;
      else
        t12 += ka2;
    }
    table.set(MomentFamily::MK, h, mk);
    table.set(MomentFamily::SK, h, sk);
    table.set(MomentFamily::T0SK, h, t0);
    table.set(MomentFamily::T12SK, h, t12);
  }
  return table;
}

std::vector<std::uint64_t> delta_table(const Field& f, int m) {
  if (m < 0) throw DomainError("delta: m must be nonnegative");
  if (m > kMaxBruteForceTuple)
    throw ScaleError("delta: brute force supports m <= " + std::to_string(kMaxBruteForceTuple));
  std::vector<std::uint64_t> counts(f.size(), 0);
  if (m == 0) {
    counts[0] = 1;
    return counts;
  }
  std::vector<FieldElement> g(f.size());
  for (FieldElement x : f.units()) g[x.enc] = f.add(x, f.inv(x));
  for_each_unit_tuple(f, m, [&](const std::vector<std::size_t>& idx, const std::vector<FieldElement>& units) {
    FieldElement s = f.zero();
    for (std::size_t i : idx) s = f.add(s, g[units[i].enc]);
    ++counts[s.enc];
  });
  return counts;
}

std::uint64_t delta(const Field& f, int m, FieldElement beta) { return delta_table(f, m).at(beta.enc); }

int delta1_closed_form(const Field& f, FieldElement beta) {
  const FieldElement d = f.sub(f.mul(beta, beta), f.one());
  if (d.is_zero()) return 1;
  return f.is_square(d) ? 2 : 0;
}

CycInt a_r_sum(const Field& f, int rr) {
  if (rr < 1) throw DomainError("a_r_sum: rr must be positive");
  if (rr > 2) throw ScaleError("a_r_sum: brute force supports rr <= 2; closed form is " +
                               a_r_closed_form(f.size(), rr).get_str());
  const auto all = f.elements();
  CharacterAccumulator acc;
  if (rr == 1) {
    for (FieldElement b : f.units())
      for (FieldElement h : all) acc.add(f, f.mul(b, f.mul(h, h)));
    return acc.value();
  }
  std::vector<FieldElement> sq(f.size());
  for (FieldElement h : all) sq[h.enc] = f.mul(h, h);
  for (FieldElement b11 : all)
    for (FieldElement b12 : all)
      for (FieldElement b22 : all) {
        if (f.sub(f.mul(b11, b22), sq[b12.enc]).is_zero()) continue;
        const FieldElement two_b12 = f.add(b12, b12);
        for (FieldElement h1 : all)
          for (FieldElement h2 : all) {
            const FieldElement v =
                f.add(f.add(f.mul(b11, sq[h1.enc]), f.mul(two_b12, f.mul(h1, h2))), f.mul(b22, sq[h2.enc]));
            acc.add(f, v);
          }
      }
  return acc.value();
}

mpz_class a_r_closed_form(std::uint32_t q, int rr) {
  if (rr < 1) throw DomainError("a_r_closed_form: rr must be positive");
  if (rr % 2 == 1) return 0;
  const mpz_class qz = q;
  mpz_class v = pow_z(qz, static_cast<unsigned long>(rr * (rr + 2) / 4));
  for (int j = 1; j <= rr / 2; ++j) v *= pow_z(qz, 2 * j - 1) - 1;
  return v;
}

std::uint64_t salie_count(const Field& f, int h) {
  if (h < 0) throw DomainError("salie_count: h must be nonnegative");
  if (h == 0) return 0;
  if (h > kMaxBruteForceTuple)
    throw ScaleError("salie_count: brute force supports h <= " + std::to_string(kMaxBruteForceTuple));
  std::uint64_t count = 0;
  for_each_unit_tuple(f, h, [&](const std::vector<std::size_t>& idx, const std::vector<FieldElement>& units) {
    FieldElement s = f.zero(), si = f.zero();
    for (std::size_t i : idx) {
      s = f.add(s, units[i]);
      si = f.add(si, f.inv(units[i]));
    }
    if (s == f.one() && si == f.one()) ++count;
  });
  return count;
}

std::vector<SalieRow> salie_check(const Field& f, int hmax) {
  if (hmax > kMaxBruteForceTuple)
    throw ScaleError("salie_check: brute force supports hmax <= " + std::to_string(kMaxBruteForceTuple));
  const MomentTable table = moments(f, hmax);
  const mpz_class q = f.size();
  std::vector<SalieRow> rows;
  for (int h = 1; h <= hmax; ++h) {
    const mpz_class m = mpz_class(std::to_string(salie_count(f, h - 1)));
    const mpz_class sign = (h - 1) % 2 == 0 ? 1 : -1;
    mpz_class rhs = q * q * m - pow_z(q - 1, h - 1) + 2 * sign;
    const mpz_class& lhs = table.get(MomentFamily::MK, h);
    rows.push_back({h, lhs, rhs, lhs == rhs});
  }
  return rows;
}

std::vector<PropERow> prop_e_check(const Field& f, int mmax) {
  if (mmax < 0) throw DomainError("prop_e_check: mmax must be nonnegative");
  if (mmax > kMaxBruteForceTuple)
    throw ScaleError("prop_e_check: brute force supports m <= " + std::to_string(kMaxBruteForceTuple));
  const KloostermanTable k(f);
  const mpz_class q = f.size();
  std::vector<PropERow> rows;
  for (int m = 0; m <= mmax; ++m) {
    const auto deltas = delta_table(f, m);
    for (FieldElement beta : f.elements()) {
      std::array<mpz_class, 3> by_trace{0, 0, 0};
      for (FieldElement a : f.units())
        by_trace[f.trace(f.neg(f.mul(a, beta)))] += pow_z(k[f.mul(a, a)], m);
      CycInt lhs = CycInt::from_root_counts(by_trace[0], by_trace[1], by_trace[2]);
      mpz_class rhs = q * mpz_class(std::to_string(deltas[beta.enc])) - pow_z(q - 1, m);
      const bool equal = lhs == CycInt(rhs);
      rows.push_back({m, beta, std::move(lhs), std::move(rhs), equal});
    }
  }
  return rows;
}

}  // namespace klc
