#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "polefrac/partialfrac.hpp"
#include "polefrac/ratfun.hpp"

namespace polefrac {
namespace io {

using json = nlohmann::json;

// Rationals are serialized as strings ("p/q" or "p") so that exact values
// survive a round trip through any JSON tooling.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const SymMatrix& m);
SymMatrix matrix_from_json(const json& j);

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

json to_json(const ClassTerm& t);
ClassTerm term_from_json(const json& j);

json to_json(const Combo& c);
Combo combo_from_json(const json& j);

json to_json(const PMExpansion& e);
json to_json(const AlphaExpansion& e);
json to_json(const QuadPoleExpansion& e);

struct ReportFailure {
  std::string where;
  std::string expected;
  std::string actual;
};

struct RunReport {
  std::string command;
  json parameters = json::object();
  long checks_passed = 0;
  long checks_failed = 0;
  std::vector<ReportFailure> failures;
  double wall_time_ms = 0.0;
};

json to_json(const RunReport& r);

}  // namespace io
}  // namespace polefrac
