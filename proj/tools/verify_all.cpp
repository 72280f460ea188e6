#include <cmath>
#include <cstdlib>
#include <future>
#include <thread>

#include "klc/charsums.hpp"
#include "klc/codes.hpp"
#include "klc/groups.hpp"
#include "klc/moments.hpp"
#include "run_config.hpp"

namespace klc::cli {

namespace {

using json::Json;

struct Scale {
  int r;
  bool full_spectra;
  int hmax_a;
  int hmax_l;
};

constexpr Scale kScales[] = {{1, true, 8, 6}, {2, true, 8, 6}, {3, false, 6, 6}};

Json check_row(const std::string& name, std::uint32_t q, Json param, bool equal, const std::string& detail) {
  return Json{{"check", name}, {"q", q}, {"param", std::move(param)}, {"equal", equal}, {"detail", detail}};
}

void add_reports(RunResult& out, const std::vector<RecursionReport>& reports) {
  for (const auto& r : reports) out.add(json::report(r), r.equal);
}

RunResult verify_scale(const Scale& s, const RunConfig& cfg) {
  RunResult out;
  const std::optional<Poly3> mod =
      cfg.modulus && poly3::degree(*cfg.modulus) == s.r ? cfg.modulus : std::nullopt;
  const Field f(s.r, mod);
  const std::uint32_t q = f.size();
  const KloostermanTable k(f);
  const MomentTable table = moments(f, k, 8);

  add_reports(out, corollary_n(f, table));

  const std::optional<std::uint64_t> jmax =
      s.full_spectra ? std::nullopt : std::optional<std::uint64_t>(std::max(s.hmax_a, s.hmax_l));
  const CodeSpectra spectra = code_spectra_dp(f, jmax);
  add_reports(out, theorem_a1(f, table, spectra.so3, spectra.sp2, s.hmax_a));
  add_reports(out, theorem_a2(f, table, spectra.o3, spectra.sp2, s.hmax_a));
  add_reports(out, theorem_l(f, table, spectra.sp2, s.hmax_l));

  for (GroupId id : {GroupId::SO3, GroupId::O3, GroupId::SP2}) {
    const SpectrumReport rep = trace_spectrum(f, id);
    out.add(check_row("trace-spectrum", q, std::string(to_string(id)), rep.agree && rep.all_positive,
                      "enumerated == closed form, all counts positive"),
            rep.agree && rep.all_positive);
    int matched = 0;
    for (FieldElement a : f.units()) matched += gauss_sum(f, id, a, rep.enumerated).equal;
    const bool ok = matched == static_cast<int>(q - 1);
    out.add(check_row("gauss-sum", q, std::string(to_string(id)), ok,
                      std::to_string(matched) + "/" + std::to_string(q - 1) + " units match the closed form"),
            ok);
  }

  if (s.r == 1) {
    for (GroupId id : {GroupId::SO3, GroupId::O3, GroupId::SP2}) {
      std::vector<SquareMatrix> bruhat;
      for (const auto& g : enumerate_group(f, id)) bruhat.push_back(g.matrix);
      const bool ok = same_multiset(bruhat, brute_force_group(f, id));
      out.add(check_row("enumeration-oracle", q, std::string(to_string(id)), ok,
                        std::to_string(bruhat.size()) + " elements vs brute-force filter"),
              ok);
    }
    for (FieldElement a : f.units())
      for (int t = 0; t <= 2; ++t) {
        const bool ok = CycInt(kloosterman_gl(f, t, a)) == kloosterman_gl_direct(f, t, a);
        out.add(check_row("kloosterman-gl", q, Json{{"t", t}, {"a", a.enc}}, ok,
                          "recursion " + kloosterman_gl(f, t, a).get_str()),
                ok);
      }
  }

  const mpz_class three = 3;
  for (CodeId id : {CodeId::SO3, CodeId::O3, CodeId::SP2}) {
    const CodeData code(f, id);
    const WeightDistribution& dp =
        id == CodeId::SO3 ? spectra.so3 : (id == CodeId::O3 ? spectra.o3 : spectra.sp2);
    if (s.full_spectra) {
      const WeightDistribution mw = weight_distribution_macwilliams(code);
      mpz_class size;
      mpz_pow_ui(size.get_mpz_t(), three.get_mpz_t(), code.length() - s.r);
      const bool ok = mw.counts == dp.counts && dp.total() == size;
      out.add(check_row("weight-distribution", q, std::string(to_string(id)), ok,
                        "dp == macwilliams over " + std::to_string(code.length() + 1) + " weights, sum = 3^(N-r)"),
              ok);
      const DualSpectrum dual = dual_spectrum(code);
      for (int h = 1; h <= 4; ++h) {
        const PlessReport p = pless_check(mw, dual, s.r, h);
        out.add(check_row("pless", q, Json{{"code", std::string(to_string(id))}, {"h", h}}, p.equal,
                          "lhs " + p.lhs.get_str()),
                p.equal);
      }
    }
    if (id != CodeId::SP2) {
      int matched = 0;
      for (FieldElement a : f.units())
        matched += mpz_class(dual_codeword(code, a).weight()) == dual_weight_formula(f, id, a);
      const bool ok = matched == static_cast<int>(q - 1);
      out.add(check_row("dual-weight", q, std::string(to_string(id)), ok,
                        std::to_string(matched) + "/" + std::to_string(q - 1) + " direct counts match"),
              ok);
    }
  }

  {
    const auto rows = prop_e_check(f, 4);
    for (int m = 0; m <= 4; ++m) {
      bool ok = true;
      for (const auto& row : rows)
        if (row.m == m) ok = ok && row.equal;
      out.add(check_row("prop-e", q, m, ok, "all beta"), ok);
    }
  }

  {
    bool weil = true;
    for (FieldElement a : f.units()) weil = weil && k[a] * k[a] <= 4L * q;
    out.add(check_row("weil-bound", q, nullptr, weil, "K(a)^2 <= 4q for all a"), weil);
    bool eq_b = true;
    for (int h = 0; h <= 8; ++h)
      eq_b = eq_b && 2 * table.get(MomentFamily::SK, h) ==
                         table.get(MomentFamily::T0SK, h) + table.get(MomentFamily::T12SK, h);
    out.add(check_row("square-moment-split", q, nullptr, eq_b, "2 SK^h = T0SK^h + T12SK^h, h <= 8"), eq_b);
  }
  return out;
}

}  // namespace

unsigned thread_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("KLC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) cap = static_cast<unsigned>(v);
  }
  return cap;
}

RunResult verify_all(const RunConfig& cfg) {
  const unsigned cap = thread_cap();
  std::vector<RunResult> results(std::size(kScales));
  // Scales are independent; run up to `cap` at a time and print in scale order.
  for (std::size_t start = 0; start < std::size(kScales); start += cap) {
    std::vector<std::future<RunResult>> batch;
    for (std::size_t i = start; i < std::min(std::size(kScales), start + cap); ++i)
      batch.push_back(std::async(cap > 1 ? std::launch::async : std::launch::deferred,
                                 [&cfg, i] { return verify_scale(kScales[i], cfg); }));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  RunResult all;
  for (auto& r : results) all.append(std::move(r));
  return all;
}

}  // namespace klc::cli
