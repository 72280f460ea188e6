#include "klc/serialize.hpp"

#include <sstream>

#include "klc/errors.hpp"

namespace klc::json {

std::string rational(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  return c.get_str();
}

mpq_class parse_rational(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ConfigError("not a rational: '" + s + "'");
  v.canonicalize();
  return v;
}

Json to_json(const CycInt& u) { return Json{{"a", u.a().get_str()}, {"b", u.b().get_str()}}; }

CycInt cyc_from_json(const Json& j) {
  return {mpz_class(j.at("a").get<std::string>()), mpz_class(j.at("b").get<std::string>())};
}

Json modulus(const Field& f) {
  Json out = Json::array();
  for (int c : f.modulus()) out.push_back(c);
  return out;
}

Json matrix(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim; ++j) row.push_back(m.at(i, j).enc);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Json> moment_rows(const MomentTable& table, int hmin) {
  std::vector<Json> rows;
  for (MomentFamily fam : kMomentFamilies)
    for (int h = hmin; h <= table.hmax(); ++h)
      rows.push_back(Json{{"q", table.q()},
                          {"family", std::string(to_string(fam))},
                          {"h", h},
                          {"value", table.get(fam, h).get_str()}});
  return rows;
}

std::vector<Json> weight_rows(const WeightDistribution& dist) {
  std::vector<Json> rows;
  rows.reserve(dist.counts.size());
  for (std::size_t j = 0; j < dist.counts.size(); ++j)
    rows.push_back(Json{{"j", j}, {"count", dist.counts[j].get_str()}});
  return rows;
}

std::vector<Json> dual_rows(const DualSpectrum& dual) {
  std::vector<Json> rows;
  for (const auto& [w, c] : dual.counts) rows.push_back(Json{{"j", w}, {"count", std::to_string(c)}});
  return rows;
}

Json report(const RecursionReport& r) {
  Json j{{"theorem", r.theorem}, {"q", r.q},         {"h", r.h},
         {"lhs", rational(r.lhs)}, {"rhs", rational(r.rhs)}, {"equal", r.equal}};
  j["quantity"] = r.quantity;
  if (!r.inputs_digest.empty()) j["inputs"] = r.inputs_digest;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string to_lines(const std::vector<Json>& rows) {
  std::string out;
  for (const auto& r : rows) out += r.dump() + "\n";
  return out;
}

namespace {

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string to_csv(const std::vector<Json>& rows) {
  if (rows.empty()) return "";
  std::ostringstream os;
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i) os << ",";
      if (r.contains(keys[i])) os << csv_cell(r.at(keys[i]));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace klc::json
