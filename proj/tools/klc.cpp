// klc: exact verification runs for Kloosterman power moments and the ternary
// codes of SO(3,q), O(3,q) and Sp(2,q), q = 3^r. Prints line-delimited JSON
// (or CSV). Exit status: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <iostream>
#include <limits>
#include <sstream>

#include "klc/charsums.hpp"
#include "klc/codes.hpp"
#include "klc/errors.hpp"
#include "klc/groups.hpp"
#include "klc/moments.hpp"
#include "klc/serialize.hpp"
#include "run_config.hpp"

namespace klc::cli {
namespace {

using json::Json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

Poly3 parse_modulus(const std::string& text) {
  Poly3 p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int c = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      p.push_back(c);
    } catch (const std::exception&) {
      throw ConfigError("--modulus expects comma-separated coefficients, constant term first; got '" + text + "'");
    }
  }
  return p;
}

FieldElement parse_element(const Field& f, long enc) {
  if (enc < 0) throw ConfigError("field element encodings are nonnegative");
  return f.element(static_cast<std::uint32_t>(enc));
}

RunResult field_info(const Field& f) {
  RunResult out;
  out.add(Json{{"q", f.size()}, {"r", f.exponent()}, {"modulus", json::modulus(f)}});
  return out;
}

RunResult charsums_moments(const Field& f, const RunConfig& cfg) {
  RunResult out;
  for (auto& row : json::moment_rows(moments(f, cfg.hmax))) out.add(std::move(row));
  return out;
}

RunResult charsums_kloosterman(const Field& f) {
  RunResult out;
  for (FieldElement a : f.units()) out.add(Json{{"q", f.size()}, {"a", a.enc}, {"value", kloosterman(f, a)}});
  return out;
}

RunResult charsums_delta(const Field& f, int m) {
  RunResult out;
  const auto table = delta_table(f, m);
  for (FieldElement beta : f.elements())
    out.add(Json{{"q", f.size()}, {"m", m}, {"beta", beta.enc}, {"count", table[beta.enc]}});
  return out;
}

RunResult charsums_prop_e(const Field& f, int mmax) {
  RunResult out;
  for (const auto& row : prop_e_check(f, mmax))
    out.add(Json{{"q", f.size()},
                 {"m", row.m},
                 {"beta", row.beta.enc},
                 {"lhs", json::to_json(row.lhs)},
                 {"rhs", row.rhs.get_str()},
                 {"equal", row.equal}},
            row.equal);
  return out;
}

// Reported, not asserted: the identity is classical only for prime q.
RunResult charsums_salie(const Field& f, int hmax) {
  RunResult out;
  for (const auto& row : salie_check(f, hmax))
    out.add(Json{{"q", f.size()}, {"h", row.h}, {"lhs", row.lhs.get_str()}, {"rhs", row.rhs.get_str()},
                 {"equal", row.equal}});
  return out;
}

RunResult charsums_kgl(const Field& f, int t, std::optional<long> a_enc) {
  RunResult out;
  std::vector<FieldElement> as = a_enc ? std::vector<FieldElement>{parse_element(f, *a_enc)} : f.units();
  for (FieldElement a : as) {
    const mpz_class rec = kloosterman_gl(f, t, a);
    Json row{{"q", f.size()}, {"t", t}, {"a", a.enc}, {"recursion", rec.get_str()}};
    bool ok = true;
    if (t <= 2) {
      const CycInt direct = kloosterman_gl_direct(f, t, a);
      ok = direct == CycInt(rec);
      row["direct"] = json::to_json(direct);
      row["equal"] = ok;
    }
    out.add(std::move(row), ok);
  }
  return out;
}

RunResult charsums_ar(const Field& f, int rr) {
  RunResult out;
  const mpz_class closed = a_r_closed_form(f.size(), rr);
  const CycInt brute = a_r_sum(f, rr);
  const bool ok = brute == CycInt(closed);
  out.add(Json{{"q", f.size()}, {"rr", rr}, {"value", json::to_json(brute)}, {"closed_form", closed.get_str()},
               {"equal", ok}},
          ok);
  return out;
}

RunResult group_enumerate(const Field& f, GroupId id, const RunConfig& cfg) {
  if (cfg.oracle && f.exponent() != 1) throw ConfigError("--oracle is only available at --q-exponent 1");
  RunResult out;
  std::vector<SquareMatrix> seen;
  std::uint64_t index = 0;
  for_each_group_element(f, id, [&](const GroupElement& g) {
    Json cell = nullptr;
    if (g.cell) cell = Json{{"r", g.cell->r}, {"rho", g.cell->rho}};
    out.add(Json{{"index", index++}, {"cell", cell}, {"matrix", json::matrix(g.matrix)}});
    if (cfg.oracle) seen.push_back(g.matrix);
  });
  const bool count_ok = index == group_order(f.size(), id);
  out.add(Json{{"group", std::string(to_string(id))}, {"q", f.size()}, {"count", index},
               {"order", group_order(f.size(), id)}, {"equal", count_ok}},
          count_ok);
  if (cfg.oracle) {
    const auto brute = brute_force_group(f, id);
    const bool match = same_multiset(seen, brute);
    out.add(Json{{"oracle", "brute-force"}, {"count", brute.size()}, {"equal", match}}, match);
  }
  return out;
}

RunResult group_spectrum(const Field& f, GroupId id) {
  RunResult out;
  const SpectrumReport rep = trace_spectrum(f, id);
  for (FieldElement beta : f.elements())
    out.add(Json{{"q", f.size()},
                 {"group", std::string(to_string(id))},
                 {"beta", beta.enc},
                 {"enumerated", rep.enumerated.counts[beta.enc]},
                 {"closed_form", rep.closed_form.counts[beta.enc]}},
            rep.enumerated.counts[beta.enc] == rep.closed_form.counts[beta.enc] &&
                rep.enumerated.counts[beta.enc] > 0);
  return out;
}

RunResult group_gauss(const Field& f, GroupId id, std::optional<long> a_enc) {
  RunResult out;
  const TraceSpectrum spectrum = trace_spectrum_enumerated(f, id);
  std::vector<FieldElement> as = a_enc ? std::vector<FieldElement>{parse_element(f, *a_enc)} : f.units();
  for (FieldElement a : as) {
    const GaussSumReport rep = gauss_sum(f, id, a, spectrum);
    out.add(Json{{"q", f.size()},
                 {"group", std::string(to_string(id))},
                 {"a", a.enc},
                 {"from_spectrum", json::to_json(rep.from_spectrum)},
                 {"closed_form", json::to_json(rep.closed_form)},
                 {"equal", rep.equal}},
            rep.equal);
  }
  return out;
}

RunResult code_spectrum(const Field& f, CodeId id, const std::string& method, bool full, const RunConfig& cfg) {
  if (full && method != "macwilliams") throw ConfigError("--full applies to --method macwilliams only");
  RunResult out;
  const std::uint64_t cap = full ? std::numeric_limits<std::uint64_t>::max() : kMaxFullSpectrumLength;
  WeightDistribution dist = method == "dp" ? weight_distribution_dp(f, id, cfg.truncate)
                                           : weight_distribution_macwilliams(CodeData(f, id), cap);
  if (cfg.truncate && dist.counts.size() > *cfg.truncate + 1) dist.counts.resize(*cfg.truncate + 1);
  for (auto& row : json::weight_rows(dist)) out.add(std::move(row));
  return out;
}

RunResult code_pless(const Field& f, CodeId id, std::optional<int> h) {
  RunResult out;
  const CodeData code(f, id);
  const WeightDistribution dist = weight_distribution_macwilliams(code);
  const DualSpectrum dual = dual_spectrum(code);
  const int lo = h ? *h : 1;
  const int hi = h ? *h : 4;
  for (int k = lo; k <= hi; ++k) {
    const PlessReport rep = pless_check(dist, dual, f.exponent(), k);
    out.add(Json{{"code", std::string(to_string(id))},
                 {"q", f.size()},
                 {"h", k},
                 {"lhs", rep.lhs.get_str()},
                 {"rhs", rep.rhs.get_str()},
                 {"equal", rep.equal}},
            rep.equal);
  }
  return out;
}

RunResult verify_theorem(const Field& f, const std::string& which, const RunConfig& cfg) {
  RunResult out;
  const MomentTable table = moments(f, cfg.hmax);
  std::vector<RecursionReport> reports;
  if (which == "corollary-n") {
    reports = corollary_n(f, table);
  } else {
    const std::uint64_t j = static_cast<std::uint64_t>(cfg.hmax);
    if (which == "theorem-a1")
      reports = theorem_a1(f, table, weight_distribution_dp(f, CodeId::SO3, j),
                           weight_distribution_dp(f, CodeId::SP2, j), cfg.hmax);
    else if (which == "theorem-a2")
      reports = theorem_a2(f, table, weight_distribution_dp(f, CodeId::O3, j),
                           weight_distribution_dp(f, CodeId::SP2, j), cfg.hmax);
    else
      reports = theorem_l(f, table, weight_distribution_dp(f, CodeId::SP2, j), cfg.hmax);
  }
  for (const auto& r : reports) out.add(json::report(r), r.equal);
  return out;
}

void emit(const RunResult& result, Output output) {
  std::cout << (output == Output::Json ? json::to_lines(result.rows) : json::to_csv(result.rows));
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Kloosterman-moment and ternary-code verification for q = 3^r"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string modulus_text, output_text = "json";
  app.add_option("--q-exponent", cfg.r, "r with q = 3^r")->check(CLI::Range(1, Field::kMaxExponent));
  app.add_option("--modulus", modulus_text, "irreducible modulus, coefficients constant term first (e.g. 1,0,1)");
  app.add_option("--output", output_text, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--truncate", cfg.truncate, "only weights j <= J");
  app.add_flag("--oracle", cfg.oracle, "cross-check against brute-force enumeration (r = 1)");
  app.add_option("--hmax", cfg.hmax, "highest moment / recursion order")->check(CLI::Range(1, 64));
  app.add_option("--seed", cfg.seed, "seed for randomized spot checks");

  std::function<RunResult(const Field&)> action;
  bool needs_field = true;

  auto* field_cmd = app.add_subcommand("field", "field parameters");
  field_cmd->add_subcommand("info", "q, r and modulus")->callback([&] { action = field_info; });
  field_cmd->require_subcommand(1);

  auto* cs = app.add_subcommand("charsums", "Kloosterman sums and power moments (default: moment table)");
  cs->require_subcommand(0, 1);
  cs->callback([&] {
    if (!action) action = [&](const Field& f) { return charsums_moments(f, cfg); };
  });
  int m = 1, mmax = 4, t = 2, rr = 2;
  std::optional<long> a_enc;
  cs->add_subcommand("kloosterman", "K(a) for every unit a")->callback([&] { action = charsums_kloosterman; });
  auto* cs_delta = cs->add_subcommand("delta", "delta(m, q; beta) for every beta");
  cs_delta->add_option("--m", m)->check(CLI::Range(0, kMaxBruteForceTuple));
  cs_delta->callback([&] { action = [&](const Field& f) { return charsums_delta(f, m); }; });
  auto* cs_prop_e = cs->add_subcommand("prop-e", "twisted moment identity for all beta, m <= mmax");
  cs_prop_e->add_option("--mmax", mmax)->check(CLI::Range(0, kMaxBruteForceTuple));
  cs_prop_e->callback([&] { action = [&](const Field& f) { return charsums_prop_e(f, mmax); }; });
  cs->add_subcommand("salie", "classical MK^h identity (reported, not asserted)")->callback([&] {
    action = [&](const Field& f) { return charsums_salie(f, std::min(cfg.hmax, kMaxBruteForceTuple)); };
  });
  auto* cs_kgl = cs->add_subcommand("kgl", "GL(t, q) Kloosterman sums");
  cs_kgl->add_option("--t", t)->check(CLI::Range(0, 32));
  cs_kgl->add_option("--a", a_enc, "encoding of a (default: all units)");
  cs_kgl->callback([&] { action = [&](const Field& f) { return charsums_kgl(f, t, a_enc); }; });
  auto* cs_ar = cs->add_subcommand("ar", "symmetric-matrix sum a_r");
  cs_ar->add_option("--rr", rr)->check(CLI::Range(1, 2));
  cs_ar->callback([&] { action = [&](const Field& f) { return charsums_ar(f, rr); }; });

  std::string group_text = "so3";
  auto* grp = app.add_subcommand("group", "SO(3,q), O(3,q), Sp(2,q)");
  grp->require_subcommand(1);
  grp->add_option("--group", group_text, "so3 | o3 | sp2")->check(CLI::IsMember({"so3", "o3", "sp2"}));
  grp->add_subcommand("enumerate", "canonical enumeration as rows of encodings")->callback([&] {
    action = [&](const Field& f) { return group_enumerate(f, parse_group_id(group_text), cfg); };
  });
  grp->add_subcommand("spectrum", "trace spectrum, enumerated vs closed form")->callback([&] {
    action = [&](const Field& f) { return group_spectrum(f, parse_group_id(group_text)); };
  });
  auto* grp_gauss = grp->add_subcommand("gauss", "group Gauss sums");
  grp_gauss->add_option("--a", a_enc, "encoding of a (default: all units)");
  grp_gauss->callback([&] {
    action = [&](const Field& f) { return group_gauss(f, parse_group_id(group_text), a_enc); };
  });

  std::string code_text = "so3", method = "dp";
  bool full_spectrum = false;
  std::optional<int> pless_h;
  auto* code = app.add_subcommand("code", "ternary codes C(SO3), C(O3), C(Sp2)");
  code->require_subcommand(1);
  code->add_option("--code", code_text, "so3 | o3 | sp2")->check(CLI::IsMember({"so3", "o3", "sp2"}));
  code->add_subcommand("dual-spectrum", "weights of the q dual codewords")->callback([&] {
    action = [&](const Field& f) {
      RunResult out;
      const CodeData data(f, parse_code_id(code_text));
      for (auto& row : json::dual_rows(dual_spectrum(data))) out.add(std::move(row));
      return out;
    };
  });
  auto* code_spec = code->add_subcommand("spectrum", "weight distribution");
  code_spec->add_option("--method", method)->check(CLI::IsMember({"dp", "macwilliams"}));
  code_spec->add_flag("--full", full_spectrum, "lift the length cap (e.g. q = 27 MacWilliams; slow)");
  code_spec->callback([&] {
    action = [&](const Field& f) { return code_spectrum(f, parse_code_id(code_text), method, full_spectrum, cfg); };
  });
  auto* code_pl = code->add_subcommand("pless", "power-moment identity (default h = 1..4)");
  code_pl->set_help_flag("--help", "Print this help message and exit");
  code_pl->add_option("--h", pless_h)->check(CLI::Range(0, 16));
  code_pl->callback([&] { action = [&](const Field& f) { return code_pless(f, parse_code_id(code_text), pless_h); }; });

  auto* verify = app.add_subcommand("verify", "recursion checks; exit 1 if any report is unequal");
  verify->require_subcommand(1);
  for (const char* name : {"theorem-a1", "theorem-a2", "theorem-l", "corollary-n"}) {
    const std::string which = name;
    verify->add_subcommand(name)->callback([&, which] {
      action = [&, which](const Field& f) { return verify_theorem(f, which, cfg); };
    });
  }
  verify->add_subcommand("all", "every check at r = 1, 2 (full) and r = 3 (truncated)")->callback([&] {
    needs_field = false;
    action = [&](const Field&) { return verify_all(cfg); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  cfg.output = output_text == "csv" ? Output::Csv : Output::Json;
  try {
    if (!modulus_text.empty()) cfg.modulus = parse_modulus(modulus_text);
    RunResult result;
    if (needs_field) {
      const Field f(cfg.r, cfg.modulus);
      result = action(f);
    } else {
      result = action(Field(1));
    }
    emit(result, cfg.output);
    return result.ok ? 0 : kExitFailure;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ScaleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace
}  // namespace klc::cli

int main(int argc, char** argv) { return klc::cli::run(argc, argv); }
