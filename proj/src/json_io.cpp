#include "polefrac/json_io.hpp"

#include <stdexcept>

namespace polefrac {
namespace io {

namespace {

const json& req(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string req_string(const json& j, const char* context) {
  if (!j.is_string())
    throw std::invalid_argument(std::string(context) +
                                " must be a JSON string");
  return j.get<std::string>();
}

}  // namespace

json to_json(const Rational& r) { return json(r.str()); }

Rational rational_from_json(const json& j) {
  return Rational::from_string(req_string(j, "rational value"));
}

json to_json(const SymMatrix& m) {
  json rows = json::array();
  for (long i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (long k = 0; k < m.dim(); ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SymMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& jrow : j) {
    if (!jrow.is_array())
      throw std::invalid_argument("matrix row must be an array");
    std::vector<Rational> row;
    for (const auto& cell : jrow) row.push_back(rational_from_json(cell));
    rows.push_back(std::move(row));
  }
  return SymMatrix::from_rows(rows);
}

json to_json(const Monomial& m) {
  json exps = json::array();
  for (long e : m.exponents) exps.push_back(e);
  return exps;
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("monomial must be a nonempty exponent array");
  std::vector<long> exps;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<long>() < 0)
      throw std::invalid_argument("monomial exponents must be nonnegative integers");
    exps.push_back(e.get<long>());
  }
  return Monomial{exps};
}

json to_json(const ClassTerm& t) {
  json denoms = json::array();
  for (const auto& m : t.denominators()) denoms.push_back(to_json(m));
  return json{{"P", to_json(t.numerator())},
              {"denoms", std::move(denoms)},
              {"delta", to_json(t.delta())}};
}

ClassTerm term_from_json(const json& j) {
  std::vector<SymMatrix> denoms;
  const json& jd = req(j, "denoms");
  if (!jd.is_array() || jd.empty())
    throw std::invalid_argument("\"denoms\" must be a nonempty array");
  for (const auto& m : jd) denoms.push_back(matrix_from_json(m));
  return ClassTerm(monomial_from_json(req(j, "P")), std::move(denoms),
                   rational_from_json(req(j, "delta")));
}

json to_json(const Combo& c) {
  json terms = json::array();
  for (const auto& ct : c.terms) {
    json jt = to_json(ct.term);
    jt["lambda"] = to_json(ct.lambda);
    terms.push_back(std::move(jt));
  }
  return json{{"terms", std::move(terms)}};
}

Combo combo_from_json(const json& j) {
  const json& jt = req(j, "terms");
  if (!jt.is_array() || jt.empty())
    throw std::invalid_argument("\"terms\" must be a nonempty array");
  Combo combo;
  for (const auto& item : jt)
    combo.terms.push_back(
        ComboTerm{rational_from_json(req(item, "lambda")),
                  term_from_json(item)});
  return combo;
}

json to_json(const PMExpansion& e) {
  json a = json::array(), b = json::array();
  for (const auto& v : e.a) a.push_back(to_json(v));
  for (const auto& v : e.b) b.push_back(to_json(v));
  return json{{"m", e.m},
              {"n", e.n},
              {"a", std::move(a)},
              {"b", std::move(b)},
              {"weight_total", to_json(e.weight_total())}};
}

json to_json(const AlphaExpansion& e) {
  json alphas = json::array();
  for (const auto& v : e.alphas) alphas.push_back(to_json(v));
  return json{{"k", e.k},
              {"constant", to_json(e.constant)},
              {"alphas", std::move(alphas)},
              {"weight_sum", to_json(e.weight_sum())}};
}

json to_json(const QuadPoleExpansion& e) {
  auto field_list = [](const std::vector<FieldElem>& v) {
    json out = json::array();
    for (const auto& f : v)
      out.push_back(json{{"q", to_json(f.q)}, {"p", f.p}});
    return out;
  };
  return json{{"k", e.k},
              {"C", to_json(e.C)},
              {"delta", to_json(e.delta)},
              {"constant", to_json(e.constant)},
              {"A", field_list(e.A)},
              {"B", field_list(e.B)}};
}

json to_json(const RunReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(json{
        {"case", f.where}, {"expected", f.expected}, {"actual", f.actual}});
  return json{{"command", r.command},
              {"parameters", r.parameters},
              {"checks_passed", r.checks_passed},
              {"checks_failed", r.checks_failed},
              {"failures", std::move(failures)},
              {"wall_time_ms", r.wall_time_ms}};
}

}  // namespace io
}  // namespace polefrac
