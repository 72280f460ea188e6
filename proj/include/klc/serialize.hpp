#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "klc/charsums.hpp"
#include "klc/codes.hpp"
#include "klc/eisenstein.hpp"
#include "klc/field.hpp"
#include "klc/groups.hpp"
#include "klc/moments.hpp"

// JSON shapes shared by the CLI and its consumers. Big integers are always
// decimal strings; rationals are "p/q" (or "p" when integral).
namespace klc::json {

using Json = nlohmann::ordered_json;

std::string rational(const mpq_class& v);
mpq_class parse_rational(const std::string& s);

Json to_json(const CycInt& u);  // {"a": "<dec>", "b": "<dec>"}
CycInt cyc_from_json(const Json& j);

Json modulus(const Field& f);  // coefficient list, constant term first
Json matrix(const SquareMatrix& m);

std::vector<Json> moment_rows(const MomentTable& table, int hmin = 1);
std::vector<Json> weight_rows(const WeightDistribution& dist);  // {"j", "count"}
std::vector<Json> dual_rows(const DualSpectrum& dual);
Json report(const RecursionReport& r);  // {"theorem","q","h","lhs","rhs","equal",...}

// One JSON object per line.
std::string to_lines(const std::vector<Json>& rows);
// Header from the first row's keys; nested values are dumped as JSON text.
std::string to_csv(const std::vector<Json>& rows);

}  // namespace klc::json
