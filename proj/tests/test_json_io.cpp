#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "polefrac/json_io.hpp"
#include "polefrac/partialfrac.hpp"

using nlohmann::json;
using polefrac::ClassTerm;
using polefrac::Combo;
using polefrac::ComboTerm;
using polefrac::Monomial;
using polefrac::Rational;
using polefrac::SymMatrix;
namespace io = polefrac::io;

TEST_CASE("rational round trip") {
  Rational r(-22, 7);
  json j = io::to_json(r);
  CHECK(j.is_string());
  CHECK(j.get<std::string>() == "-22/7");
  CHECK(io::rational_from_json(j) == r);
  CHECK(io::to_json(Rational(5)).get<std::string>() == "5");
  CHECK(io::rational_from_json(json("5")) == Rational(5));
  CHECK_THROWS_AS(io::rational_from_json(json("x/y")), std::invalid_argument);
  CHECK_THROWS_AS(io::rational_from_json(json(3.14)), std::invalid_argument);
  CHECK_THROWS_AS(io::rational_from_json(json("1/0")), std::invalid_argument);
}

TEST_CASE("matrix round trip") {
  SymMatrix m = SymMatrix::from_rows({{Rational(1), Rational(1, 2)},
                                      {Rational(1, 2), Rational(3, 4)}});
  json j = io::to_json(m);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0][1].get<std::string>() == "1/2");
  CHECK(io::matrix_from_json(j) == m);

  CHECK_THROWS_AS(io::matrix_from_json(json::object()), std::invalid_argument);
  CHECK_THROWS_AS(io::matrix_from_json(json::array()), std::invalid_argument);
  // ragged rows
  CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"([["1","0"],["0"]])")),
                  std::invalid_argument);
  // asymmetric
  CHECK_THROWS_AS(
      io::matrix_from_json(json::parse(R"([["1","1"],["0","1"]])")),
      std::invalid_argument);
}

TEST_CASE("monomial round trip") {
  Monomial m{{2, 0, 1}};
  json j = io::to_json(m);
  CHECK(j == json::parse("[2,0,1]"));
  CHECK(io::monomial_from_json(j) == m);
  CHECK_THROWS_AS(io::monomial_from_json(json("nope")),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::monomial_from_json(json::parse("[2,-1]")),
                  std::invalid_argument);
}

TEST_CASE("class term round trip") {
  ClassTerm t(Monomial{{2}}, {SymMatrix::identity(1)}, Rational(1, 2));
  json j = io::to_json(t);
  CHECK(j.contains("P"));
  CHECK(j.contains("denoms"));
  CHECK(j.contains("delta"));
  ClassTerm back = io::term_from_json(j);
  CHECK(back == t);
  CHECK(back.numerator() == t.numerator());
  CHECK(back.delta() == t.delta());

  json missing = j;
  missing.erase("denoms");
  CHECK_THROWS_AS(io::term_from_json(missing), std::invalid_argument);
}

TEST_CASE("combo round trip") {
  Combo c;
  c.terms.push_back(ComboTerm{
      Rational(1), ClassTerm(Monomial{{2}}, {SymMatrix::identity(1)},
                             Rational(1, 2))});
  c.terms.push_back(ComboTerm{
      Rational(-1, 3),
      ClassTerm(Monomial{{2}}, {SymMatrix::diagonal({Rational(3, 2)})},
                Rational(1, 2))});
  json j = io::to_json(c);
  REQUIRE(j.contains("terms"));
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][1]["lambda"].get<std::string>() == "-1/3");
  Combo back = io::combo_from_json(j);
  REQUIRE(back.terms.size() == 2);
  CHECK(back.terms[1].lambda == Rational(-1, 3));
  CHECK(back.terms[0].term == c.terms[0].term);
  std::vector<Rational> x{Rational(3, 7)};
  CHECK(back.eval(x) == c.eval(x));

  CHECK_THROWS_AS(io::combo_from_json(json::object()), std::invalid_argument);
}

TEST_CASE("expansion serializations keep rationals as strings") {
  polefrac::PMExpansion pm = polefrac::decomp_pm(2, 1);
  json jpm = io::to_json(pm);
  CHECK(jpm["m"] == 2);
  CHECK(jpm["n"] == 1);
  CHECK(jpm["a"][1].get<std::string>() == "1/2");
  CHECK(jpm["weight_total"].get<std::string>() == "1");

  polefrac::AlphaExpansion al = polefrac::decomp_alphas(2);
  json jal = io::to_json(al);
  CHECK(jal["k"] == 2);
  CHECK(jal["constant"].get<std::string>() == "1");
  CHECK(jal["alphas"][0].get<std::string>() == "-3/4");
  CHECK(jal["weight_sum"].get<std::string>() == "3");

  polefrac::QuadPoleExpansion qp =
      polefrac::decomp_quad_pole(1, Rational(1), Rational(1, 2));
  json jqp = io::to_json(qp);
  CHECK(jqp["C"].get<std::string>() == "1");
  REQUIRE(jqp["A"].is_array());
  CHECK(jqp["A"][0].contains("q"));
  CHECK(jqp["A"][0].contains("p"));
}

TEST_CASE("run report serialization") {
  io::RunReport rep;
  rep.command = "coeffs";
  rep.parameters = json{{"n_max", 5}};
  rep.checks_passed = 12;
  rep.checks_failed = 1;
  rep.failures.push_back(io::ReportFailure{"row 3", "1/2", "1/3"});
  rep.wall_time_ms = 1.5;
  json j = io::to_json(rep);
  CHECK(j["command"] == "coeffs");
  CHECK(j["parameters"]["n_max"] == 5);
  CHECK(j["checks_passed"] == 12);
  CHECK(j["checks_failed"] == 1);
  REQUIRE(j["failures"].size() == 1);
  CHECK(j["failures"][0]["case"] == "row 3");
  CHECK(j["failures"][0]["expected"] == "1/2");
  CHECK(j["failures"][0]["actual"] == "1/3");
  CHECK(j["wall_time_ms"].get<double>() == doctest::Approx(1.5));
}
