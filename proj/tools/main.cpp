#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polefrac/coeffs.hpp"
#include "polefrac/json_io.hpp"
#include "polefrac/partialfrac.hpp"
#include "polefrac/ratfun.hpp"
#include "polefrac/sampling.hpp"
#include "polefrac/semipole.hpp"
#include "polefrac/verify.hpp"

namespace pf = polefrac;
using pf::Rational;
using pf::io::json;
using pf::io::RunReport;

namespace {

struct Output {
  std::string format = "text";  // text | csv | json
  std::string out_path;

  void emit(const std::string& payload) const {
    if (out_path.empty()) {
      std::cout << payload;
      if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << payload;
    std::cout << "wrote " << out_path << "\n";
  }
};

struct Recorder {
  RunReport report;
  std::ostringstream text;

  void check(bool ok, const std::string& where, const std::string& expected,
             const std::string& actual) {
    if (ok) {
      ++report.checks_passed;
    } else {
      ++report.checks_failed;
      if (report.failures.size() < 32)
        report.failures.push_back({where, expected, actual});
    }
  }
  void check(bool ok, const std::string& where) {
    check(ok, where, "true", "false");
  }
};

json parse_json_arg(const std::string& arg, const char* what) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f)
      throw std::invalid_argument(std::string("cannot read ") + what +
                                  " file " + arg.substr(1));
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON for ") + what +
                                ": " + e.what());
  }
}

pf::Monomial parse_monomial(const std::string& arg) {
  std::vector<long> exps;
  std::stringstream ss(arg);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      size_t pos = 0;
      long v = std::stol(piece, &pos);
      if (pos != piece.size()) throw std::invalid_argument("");
      exps.push_back(v);
    } catch (...) {
      throw std::invalid_argument("invalid exponent list \"" + arg + "\"");
    }
  }
  if (exps.empty())
    throw std::invalid_argument("exponent list must be nonempty");
  return pf::Monomial{exps};
}

std::vector<Rational> parse_rational_list(const std::string& arg) {
  std::vector<Rational> vals;
  std::stringstream ss(arg);
  std::string piece;
  while (std::getline(ss, piece, ','))
    vals.push_back(Rational::from_string(piece));
  if (vals.empty()) throw std::invalid_argument("rational list must be nonempty");
  return vals;
}

std::string finish(Recorder& rec, const Output& out, const json& payload,
                   std::chrono::steady_clock::time_point start) {
  rec.report.wall_time_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  json j = pf::io::to_json(rec.report);
  for (auto it = payload.begin(); it != payload.end(); ++it)
    j[it.key()] = it.value();
  return j.dump(2);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int run_coeffs(const Output& out, long n_max, long extra) {
  if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
  if (extra < 0) throw std::invalid_argument("--extra must be >= 0");
  auto start = std::chrono::steady_clock::now();
  Recorder rec;
  rec.report.command = "coeffs";
  rec.report.parameters = {{"n_max", n_max}, {"extra", extra}};

  json rows = json::array();
  std::ostringstream csv;
  csv << "n,i,closed,oracle,match\n";
  for (long n = 1; n <= n_max; ++n) {
    pf::CoeffTable oracle = pf::coeff_oracle(n, n + extra);
    for (long i = 0; i <= n + extra; ++i) {
      Rational closed = pf::coeff_closed(n, i);
      const Rational& expect = oracle.values[static_cast<size_t>(i)];
      bool ok = closed == expect;
      rec.check(ok, "c[n=" + std::to_string(n) + ",i=" + std::to_string(i) + "]",
                expect.str(), closed.str());
      if (out.format == "json")
        rows.push_back({{"n", n},
                        {"i", i},
                        {"closed", closed.str()},
                        {"oracle", expect.str()},
                        {"match", ok}});
      else if (out.format == "csv")
        csv << n << ',' << i << ',' << closed.str() << ',' << expect.str()
            << ',' << (ok ? 1 : 0) << '\n';
      else
        rec.text << "c[" << n << "," << i << "] = " << closed.str()
                 << (ok ? "" : "  MISMATCH oracle=" + expect.str()) << "\n";
    }
  }

  if (out.format == "json") {
    out.emit(finish(rec, out, json{{"rows", rows}}, start));
  } else if (out.format == "csv") {
    out.emit(csv.str());
  } else {
    rec.text << "checks passed: " << rec.report.checks_passed
             << ", failed: " << rec.report.checks_failed << "\n";
    out.emit(rec.text.str());
  }
  return rec.report.checks_failed == 0 ? 0 : 1;
}

int run_identities(const Output& out, long n_max, long b_max, bool corrupt) {
  if (n_max < 1 || b_max < 1)
    throw std::invalid_argument("--n-max and --b-max must be >= 1");
  auto start = std::chrono::steady_clock::now();
  Recorder rec;
  rec.report.command = "identities";
  rec.report.parameters = {{"n_max", n_max}, {"b_max", b_max}};
  std::ostringstream csv;
  csv << "family,case,ok\n";
  auto note = [&](const std::string& family, const std::string& tag, bool ok) {
    rec.check(ok, family + " " + tag);
    if (out.format == "csv")
      csv << family << ',' << csv_escape(tag) << ',' << (ok ? 1 : 0) << '\n';
  };

  for (long n = 1; n <= n_max; ++n) {
    note("four-thirds", "n=" + std::to_string(n),
         pf::four_thirds_identity_check(n));
    for (long a = -(n + 2); a <= n + 2; ++a)
      note("alternating-convolution",
           "n=" + std::to_string(n) + " a=" + std::to_string(a),
           pf::alternating_convolution_check(n, a));
  }
  for (long b = 1; b <= b_max; ++b)
    for (long l = -10; l <= 10; ++l)
      note("vandermonde", "b=" + std::to_string(b) + " l=" + std::to_string(l),
           pf::vandermonde_check(b, l));
  for (long n = 1; n <= n_max; ++n) {
    pf::CoeffTable oracle = pf::coeff_oracle(n, n + 15);
    for (long l = -n - 1; l <= 10; ++l)
      note("convolution-formula",
           "n=" + std::to_string(n) + " l=" + std::to_string(l),
           pf::convolution_formula_check(oracle, l));
  }
  if (corrupt)
    rec.check(false, "corrupt self-test", "injected failure",
              "injected failure");

  if (out.format == "json") {
    out.emit(finish(rec, out, json::object(), start));
  } else if (out.format == "csv") {
    out.emit(csv.str());
  } else {
    rec.text << "identity sweeps: passed " << rec.report.checks_passed
             << ", failed " << rec.report.checks_failed << "\n";
    for (const auto& f : rec.report.failures)
      rec.text << "  FAIL " << f.where << "\n";
    out.emit(rec.text.str());
  }
  return rec.report.checks_failed == 0 ? 0 : 1;
}

int run_pfrac(const Output& out, const std::string& kind, long m, long n,
              long k, const std::string& c_str, const std::string& delta_str,
              std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  Recorder rec;
  rec.report.command = "pfrac";
  json payload = json::object();
  std::ostringstream csv;
  csv << "key,value\n";

  if (kind == "pm") {
    rec.report.parameters = {{"kind", kind}, {"m", m}, {"n", n}};
    pf::PMExpansion e = pf::decomp_pm(m, n);
    payload["expansion"] = pf::io::to_json(e);
    bool positive = true;
    for (const auto& v : e.a) positive = positive && v > Rational(0);
    for (const auto& v : e.b) positive = positive && v > Rational(0);
    rec.check(positive, "weights positive");
    rec.check(e.weight_total() == Rational(1), "weights sum to one", "1",
              e.weight_total().str());
    for (const Rational& z :
         {Rational(1, 2), Rational(-1, 3), Rational(5, 7)})
      rec.check(pf::pm_recombine_check(e, z), "recombination z=" + z.str());
    for (size_t j = 0; j < e.a.size(); ++j)
      csv << "a[" << j + 1 << "]," << e.a[j].str() << '\n';
    for (size_t i = 0; i < e.b.size(); ++i)
      csv << "b[" << i + 1 << "]," << e.b[i].str() << '\n';
    rec.text << "1/((1-z)^" << m << " (1+z)^" << n << "):\n";
    for (size_t j = 0; j < e.a.size(); ++j)
      rec.text << "  (1-z)^-" << j + 1 << "  " << e.a[j].str() << "\n";
    for (size_t i = 0; i < e.b.size(); ++i)
      rec.text << "  (1+z)^-" << i + 1 << "  " << e.b[i].str() << "\n";
  } else if (kind == "alpha") {
    rec.report.parameters = {{"kind", kind}, {"k", k}};
    pf::AlphaExpansion e = pf::decomp_alphas(k);
    payload["expansion"] = pf::io::to_json(e);
    rec.check(e.coarse_bound_holds(), "weight sum <= 2^k");
    rec.check(e.improved_bound_holds(), "weight sum <= 2 (4/3)^k");
    rec.check(pf::alpha_vs_c_check(k), "alphas match closed coefficients");
    rec.check(pf::alpha_series_check(k), "series recombination");
    csv << "constant," << e.constant.str() << '\n';
    for (size_t j = 0; j < e.alphas.size(); ++j)
      csv << "alpha[" << j + 1 << "]," << e.alphas[j].str() << '\n';
    csv << "weight_sum," << e.weight_sum().str() << '\n';
    rec.text << "z^" << 2 * k << "/(1-z^2)^" << k
             << ": constant = " << e.constant.str() << "\n";
    for (size_t j = 0; j < e.alphas.size(); ++j)
      rec.text << "  alpha[" << j + 1 << "] = " << e.alphas[j].str() << "\n";
    rec.text << "  weight sum = " << e.weight_sum().str() << "\n";
  } else if (kind == "quadpole") {
    Rational C = Rational::from_string(c_str);
    Rational delta = Rational::from_string(delta_str);
    rec.report.parameters = {
        {"kind", kind}, {"k", k}, {"C", C.str()}, {"delta", delta.str()}};
    pf::QuadPoleExpansion e = pf::decomp_quad_pole(k, C, delta);
    payload["expansion"] = pf::io::to_json(e);
    rec.check(pf::quad_pole_symbolic_check(e), "symbolic recombination");
    double worst = pf::quad_pole_recombine_numeric(e, 60, seed);
    rec.check(worst <= 1e-9, "numeric recombination", "<= 1e-9",
              std::to_string(worst));
    rec.check(e.coefficient_bound_holds(), "magnitude bound");
    csv << "constant," << e.constant.str() << '\n';
    for (size_t v = 0; v < e.A.size(); ++v) {
      csv << "A[" << v + 1 << "]," << e.A[v].q.str() << " * w^" << e.A[v].p
          << '\n';
      csv << "B[" << v + 1 << "]," << e.B[v].q.str() << " * w^" << e.B[v].p
          << '\n';
    }
    rec.text << "z^" << 2 * k << "/(1+" << C.str() << " z^2)^" << k
             << ", pole at i/sqrt(C):\n  constant = " << e.constant.str()
             << "\n";
    for (size_t v = 0; v < e.A.size(); ++v) {
      auto av = e.render(e.A[v]);
      auto bv = e.render(e.B[v]);
      rec.text << "  A[" << v + 1 << "] = " << e.A[v].q.str() << " w^"
               << e.A[v].p << " = " << av.real() << (av.imag() < 0 ? "" : "+")
               << av.imag() << "i\n";
      rec.text << "  B[" << v + 1 << "] = " << e.B[v].q.str() << " w^"
               << e.B[v].p << " = " << bv.real() << (bv.imag() < 0 ? "" : "+")
               << bv.imag() << "i\n";
    }
  } else {
    throw std::invalid_argument("--kind must be pm, alpha, or quadpole");
  }

  if (out.format == "json") {
    out.emit(finish(rec, out, payload, start));
  } else if (out.format == "csv") {
    out.emit(csv.str());
  } else {
    rec.text << "checks passed: " << rec.report.checks_passed
             << ", failed: " << rec.report.checks_failed << "\n";
    for (const auto& f : rec.report.failures)
      rec.text << "  FAIL " << f.where << " expected " << f.expected << " got "
               << f.actual << "\n";
    out.emit(rec.text.str());
  }
  return rec.report.checks_failed == 0 ? 0 : 1;
}

int run_decompose(const Output& out, const std::string& p_str,
                  const std::string& c_str, const std::string& d_str, long r,
                  const std::string& delta_str, int samples,
                  std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  Recorder rec;
  rec.report.command = "decompose-diff";
  pf::Monomial P = parse_monomial(p_str);
  pf::SymMatrix C = pf::io::matrix_from_json(parse_json_arg(c_str, "--C"));
  pf::SymMatrix D = pf::io::matrix_from_json(parse_json_arg(d_str, "--D"));
  Rational delta = Rational::from_string(delta_str);
  rec.report.parameters = {{"P", p_str},
                           {"r", r},
                           {"delta", delta.str()},
                           {"samples", samples}};

  pf::Combo combo = pf::difference_decompose(P, C, D, r, delta);
  json payload = {{"combo", pf::io::to_json(combo)}};

  bool members = true;
  for (const auto& ct : combo.terms) members = members && ct.term.in_class(2);
  rec.check(members, "every term in class");

  pf::ClassTerm f(P, std::vector<pf::SymMatrix>(r, C), delta);
  pf::ClassTerm g(P, std::vector<pf::SymMatrix>(r, D), delta);
  std::mt19937_64 eng(seed);
  long d = P.dim();
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> x =
        pf::sampling::random_point(eng, d, Rational(-2), Rational(2), 128);
    Rational lhs = g.eval(x) - f.eval(x);
    Rational rhs = combo.eval(x);
    rec.check(lhs == rhs, "identity at sample " + std::to_string(s),
              lhs.str(), rhs.str());
  }
  Rational cert = pf::norm_certificate(combo, delta, r + 1, 2);
  payload["certificate"] = cert.str();

  if (out.format == "json") {
    out.emit(finish(rec, out, payload, start));
  } else if (out.format == "csv") {
    std::ostringstream csv;
    csv << "term,lambda\n";
    for (size_t t = 0; t < combo.terms.size(); ++t)
      csv << t << ',' << combo.terms[t].lambda.str() << '\n';
    csv << "certificate," << cert.str() << '\n';
    out.emit(csv.str());
  } else {
    rec.text << "difference decomposition: " << combo.terms.size()
             << " terms, certificate " << cert.str() << "\n";
    rec.text << "checks passed: " << rec.report.checks_passed
             << ", failed: " << rec.report.checks_failed << "\n";
    out.emit(rec.text.str());
  }
  return rec.report.checks_failed == 0 ? 0 : 1;
}

int run_recover(const Output& out, bool counterexample, bool witness,
                const std::string& combo_str, const std::string& alpha_str,
                const std::string& p_str, const std::string& c_str,
                const std::string& d_str, long r,
                const std::string& delta_str, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  Recorder rec;
  rec.report.command = "recover";
  json payload = json::object();
  std::ostringstream csv;

  if (counterexample) {
    rec.report.parameters = {{"mode", "counterexample"}};
    bool ok = pf::verify_counterexample();
    rec.check(ok, "three-term relation with smaller certificate");
    payload["holds"] = ok;
    csv << "key,value\ncounterexample_holds," << (ok ? 1 : 0) << '\n';
    rec.text << "three-term relation "
             << (ok ? "verified exactly" : "FAILED") << ":\n"
             << "  2/((1+x^2)(1+3x^2)) - 1/((1+x^2)(1+2x^2)) = "
                "1/((1+2x^2)(1+3x^2))\n"
             << "  certificate of the left combination: 3; of the right: 1\n";
  } else if (witness) {
    if (p_str.empty() || c_str.empty() || d_str.empty() || delta_str.empty())
      throw std::invalid_argument(
          "--witness needs --P, --C, --D, --r and --delta");
    pf::Monomial P = parse_monomial(p_str);
    pf::SymMatrix C = pf::io::matrix_from_json(parse_json_arg(c_str, "--C"));
    pf::SymMatrix D = pf::io::matrix_from_json(parse_json_arg(d_str, "--D"));
    Rational delta = Rational::from_string(delta_str);
    rec.report.parameters = {{"mode", "witness"}, {"P", p_str}, {"r", r}};
    pf::WitnessResult w = pf::norm_two_witness(P, C, D, r, delta, seed);
    rec.check(w.opposite_signs(), "top coefficients have opposite signs");
    Rational p_alpha = P.eval(w.alpha);
    pf::Complex want_c = pf::witness_expected_top(Rational(1), p_alpha, w.q_c, r);
    pf::Complex want_d =
        pf::witness_expected_top(Rational(-1), p_alpha, w.q_d, r);
    rec.check(std::abs(w.c_at_C - want_c) <= 1e-3 * std::abs(want_c),
              "closed form at first pole");
    rec.check(std::abs(w.c_at_D - want_d) <= 1e-3 * std::abs(want_d),
              "closed form at second pole");
    json alpha = json::array();
    for (const auto& a : w.alpha) alpha.push_back(a.str());
    payload["alpha"] = alpha;
    payload["q_C"] = w.q_c.str();
    payload["q_D"] = w.q_d.str();
    payload["top_at_C"] = {w.c_at_C.real(), w.c_at_C.imag()};
    payload["top_at_D"] = {w.c_at_D.real(), w.c_at_D.imag()};
    payload["expected_at_C"] = {want_c.real(), want_c.imag()};
    payload["expected_at_D"] = {want_d.real(), want_d.imag()};
    csv << "key,value\nq_C," << w.q_c.str() << "\nq_D," << w.q_d.str()
        << "\ntop_at_C," << w.c_at_C.real() << "+" << w.c_at_C.imag() << "i"
        << "\ntop_at_D," << w.c_at_D.real() << "+" << w.c_at_D.imag() << "i\n";
    rec.text << "witness ray:";
    for (const auto& a : w.alpha) rec.text << " " << a.str();
    rec.text << "\n  q_C = " << w.q_c.str() << ", q_D = " << w.q_d.str()
             << "\n  top at first pole:  " << w.c_at_C
             << "\n  top at second pole: " << w.c_at_D
             << "\n  opposite signs: " << (w.opposite_signs() ? "yes" : "NO")
             << "\n";
  } else {
    if (combo_str.empty())
      throw std::invalid_argument(
          "recover needs --combo (or --counterexample / --witness)");
    pf::Combo combo =
        pf::io::combo_from_json(parse_json_arg(combo_str, "--combo"));
    rec.report.parameters = {{"mode", "combo"}};
    long d = combo.dim();
    std::vector<Rational> alpha;
    if (!alpha_str.empty()) {
      alpha = parse_rational_list(alpha_str);
      if (static_cast<long>(alpha.size()) != d)
        throw std::invalid_argument("--alpha has wrong dimension");
      if (!pf::genericity_check(alpha, combo))
        throw pf::recovery_error("the supplied ray is not generic");
    } else {
      bool found = false;
      for (int att = 0; att < 50 && !found; ++att) {
        alpha = pf::random_direction(d, seed + att);
        found = pf::genericity_check(alpha, combo);
      }
      if (!found) throw pf::recovery_error("no generic ray found");
    }
    pf::RaySlice slice = pf::ray_restrict(combo, alpha);

    // Pole orders along the slice: multiplicity of each quadratic value.
    std::map<Rational, long> orders;
    for (const auto& term : slice.terms) {
      std::map<Rational, long> local;
      for (const auto& q : term.qs) ++local[q];
      for (const auto& [q, mult] : local)
        orders[q] = std::max(orders[q], mult);
    }
    json alpha_json = json::array();
    for (const auto& a : alpha) alpha_json.push_back(a.str());
    payload["alpha"] = alpha_json;
    json poles = json::array();
    csv << "q,y,order,re,im,error_bar,reliable\n";
    rec.text << "ray:";
    for (const auto& a : alpha) rec.text << " " << a.str();
    rec.text << "\n";
    for (const auto& [q, mult] : orders) {
      double y = 1.0 / std::sqrt(q.to_double());
      pf::RecoveredCoefficients got =
          pf::recover_coefficients(slice.fn(), y, mult);
      json pole = {{"q", q.str()}, {"y", y}, {"order", mult}};
      json coeffs = json::array();
      for (size_t idx = 0; idx < got.coeffs.size(); ++idx) {
        long ord = mult - static_cast<long>(idx);
        bool reliable = got.error_bars[idx] <= 1e-4;
        rec.check(reliable,
                  "error bar at q=" + q.str() + " order=" + std::to_string(ord),
                  "<= 1e-4", std::to_string(got.error_bars[idx]));
        coeffs.push_back({{"order", ord},
                          {"re", got.coeffs[idx].real()},
                          {"im", got.coeffs[idx].imag()},
                          {"error_bar", got.error_bars[idx]}});
        csv << q.str() << ',' << y << ',' << ord << ','
            << got.coeffs[idx].real() << ',' << got.coeffs[idx].imag() << ','
            << got.error_bars[idx] << ',' << (reliable ? 1 : 0) << '\n';
        rec.text << "  pole i*" << y << " order " << ord << ": "
                 << got.coeffs[idx] << " (err " << got.error_bars[idx]
                 << ")\n";
      }
      pole["coefficients"] = coeffs;
      poles.push_back(pole);
    }
    payload["poles"] = poles;
  }

  if (out.format == "json") {
    out.emit(finish(rec, out, payload, start));
  } else if (out.format == "csv") {
    out.emit(csv.str());
  } else {
    rec.text << "checks passed: " << rec.report.checks_passed
             << ", failed: " << rec.report.checks_failed << "\n";
    out.emit(rec.text.str());
  }
  return rec.report.checks_failed == 0 ? 0 : 1;
}

int run_bounds(const Output& out, const std::string& p_str,
               const std::vector<std::string>& denom_strs,
               const std::string& delta_str) {
  auto start = std::chrono::steady_clock::now();
  Recorder rec;
  rec.report.command = "bounds";
  pf::Monomial P = parse_monomial(p_str);
  Rational delta = Rational::from_string(delta_str);
  std::vector<pf::SymMatrix> denoms;
  for (const auto& s : denom_strs)
    denoms.push_back(pf::io::matrix_from_json(parse_json_arg(s, "--denom")));
  pf::ClassTerm term(P, denoms, delta);
  rec.report.parameters = {{"P", p_str},
                           {"r", term.order()},
                           {"delta", delta.str()}};

  long distinct = term.distinct_denominators();
  std::string failure = term.class_failure(distinct);
  rec.check(failure.empty(), "class membership",
            "window holds for every denominator", failure);
  pf::SupBounds sb = pf::sup_bounds(term);
  rec.check(sb.empirical_sup <= sb.upper.to_double() * (1 + 1e-9),
            "empirical sup below upper bound", "<= " + sb.upper.str(),
            std::to_string(sb.empirical_sup));
  rec.check(sb.empirical_sup >= sb.lower.to_double() * (1 - 1e-9),
            "empirical sup above lower bound", ">= " + sb.lower.str(),
            std::to_string(sb.empirical_sup));

  json windows = json::array();
  for (const auto& m : denoms) {
    auto [lo_bracket, hi_bracket] = pf::eigen_window(m, Rational(1, 1000));
    windows.push_back(
        {{"lambda_min", {lo_bracket.lo.str(), lo_bracket.hi.str()}},
         {"lambda_max", {hi_bracket.lo.str(), hi_bracket.hi.str()}},
         {"in_window", pf::in_window(m, delta)}});
  }
  json payload = {{"empirical_sup", sb.empirical_sup},
                  {"upper", sb.upper.str()},
                  {"lower", sb.lower.str()},
                  {"distinct_denominators", distinct},
                  {"eigen_windows", windows}};

  if (out.format == "json") {
    out.emit(finish(rec, out, payload, start));
  } else if (out.format == "csv") {
    std::ostringstream csv;
    csv << "key,value\nempirical_sup," << sb.empirical_sup << "\nupper,"
        << sb.upper.str() << "\nlower," << sb.lower.str() << "\ndistinct,"
        << distinct << '\n';
    out.emit(csv.str());
  } else {
    rec.text << "sup bounds: " << sb.lower.str()
             << " <= " << sb.empirical_sup << " <= " << sb.upper.str() << "\n"
             << "distinct denominators: " << distinct << "\n"
             << "checks passed: " << rec.report.checks_passed
             << ", failed: " << rec.report.checks_failed << "\n";
    out.emit(rec.text.str());
  }
  return rec.report.checks_failed == 0 ? 0 : 1;
}

int run_verify_all(const Output& out, const std::string& profile_str) {
  auto start = std::chrono::steady_clock::now();
  pf::verify::Profile profile;
  if (profile_str == "quick")
    profile = pf::verify::Profile::quick;
  else if (profile_str == "full")
    profile = pf::verify::Profile::full;
  else
    throw std::invalid_argument("--profile must be quick or full");

  Recorder rec;
  rec.report.command = "verify-all";
  rec.report.parameters = {{"profile", profile_str}};

  std::vector<pf::verify::CriterionResult> results = pf::verify::run_all(profile);
  json criteria = json::array();
  std::ostringstream csv;
  csv << "criterion,name,passed,failed,wall_ms\n";
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.ok();
    rec.report.checks_passed += r.passed;
    rec.report.checks_failed += r.failed;
    for (const auto& f : r.failures)
      if (rec.report.failures.size() < 32)
        rec.report.failures.push_back({f.where, f.expected, f.actual});
    json jr = {{"id", r.id},
               {"name", r.name},
               {"passed", r.passed},
               {"failed", r.failed},
               {"wall_ms", r.wall_ms}};
    criteria.push_back(jr);
    csv << r.id << ',' << csv_escape(r.name) << ',' << r.passed << ','
        << r.failed << ',' << r.wall_ms << '\n';
    rec.text << (r.ok() ? "PASS" : "FAIL") << " criterion " << r.id << ": "
             << r.name << " (passed=" << r.passed << ", failed=" << r.failed
             << ") [" << static_cast<long>(r.wall_ms) << " ms]\n";
    for (const auto& f : r.failures)
      rec.text << "    " << f.where << ": expected " << f.expected << ", got "
               << f.actual << "\n";
  }
  rec.text << (all_ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";

  if (out.format == "json") {
    out.emit(finish(rec, out, json{{"criteria", criteria}}, start));
  } else if (out.format == "csv") {
    out.emit(csv.str());
  } else {
    out.emit(rec.text.str());
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational-function decompositions: coefficients, "
               "partial fractions, difference identities, norm bounds, and "
               "semipole recovery"};
  app.require_subcommand(1);

  Output out;
  std::uint64_t seed = 20240801;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out.out_path, "write the payload to this file");
  app.add_option("--seed", seed, "random seed")->capture_default_str();

  auto* coeffs = app.add_subcommand(
      "coeffs", "tabulate closed-form coefficients against the series oracle");
  long n_max = 12, extra = 10;
  coeffs->add_option("--n-max", n_max, "largest power")->capture_default_str();
  coeffs->add_option("--extra", extra, "indices beyond n per row")
      ->capture_default_str();

  auto* identities =
      app.add_subcommand("identities", "run the binomial identity sweeps");
  long id_n_max = 24, id_b_max = 24;
  bool corrupt = false;
  identities->add_option("--n-max", id_n_max, "sweep cap for n")
      ->capture_default_str();
  identities->add_option("--b-max", id_b_max, "sweep cap for b")
      ->capture_default_str();
  identities->add_flag("--corrupt", corrupt)->group("");  // hidden self-test

  auto* pfrac = app.add_subcommand(
      "pfrac", "exact partial-fraction expansions with recombination checks");
  std::string kind;
  long pm_m = 2, pm_n = 2, alpha_k = 4;
  std::string quad_c = "1", quad_delta = "1/2";
  pfrac->add_option("--kind", kind, "pm | alpha | quadpole")->required();
  pfrac->add_option("--m", pm_m, "power of (1-z)")->capture_default_str();
  pfrac->add_option("--n", pm_n, "power of (1+z)")->capture_default_str();
  pfrac->add_option("--k", alpha_k, "power of the quadratic denominator")
      ->capture_default_str();
  pfrac->add_option("--C", quad_c, "quadratic coefficient (rational)")
      ->capture_default_str();
  pfrac->add_option("--delta", quad_delta, "window parameter")
      ->capture_default_str();

  auto* decompose = app.add_subcommand(
      "decompose-diff",
      "exact difference decomposition of P/h_D^r - P/h_C^r");
  std::string dd_p, dd_c, dd_d, dd_delta = "1/2";
  long dd_r = 1;
  int dd_samples = 20;
  decompose->add_option("--P", dd_p, "numerator exponents, e.g. 2,0")
      ->required();
  decompose->add_option("--C", dd_c, "first matrix (JSON or @file)")
      ->required();
  decompose->add_option("--D", dd_d, "second matrix (JSON or @file)")
      ->required();
  decompose->add_option("--r", dd_r, "denominator power")->required();
  decompose->add_option("--delta", dd_delta, "window parameter")
      ->capture_default_str();
  decompose->add_option("--samples", dd_samples, "verification points")
      ->capture_default_str();

  auto* recover = app.add_subcommand(
      "recover", "numerical semipole coefficient recovery");
  bool counterexample = false, witness = false;
  std::string rc_combo, rc_alpha, rc_p, rc_c, rc_d, rc_delta = "1/2";
  long rc_r = 1;
  recover->add_flag("--counterexample", counterexample,
                    "verify the three-term relation");
  recover->add_flag("--witness", witness,
                    "two-pole witness with closed-form top coefficients");
  recover->add_option("--combo", rc_combo, "combo JSON (or @file)");
  recover->add_option("--alpha", rc_alpha, "ray direction, e.g. 1,3/2");
  recover->add_option("--P", rc_p, "witness numerator exponents");
  recover->add_option("--C", rc_c, "witness first matrix");
  recover->add_option("--D", rc_d, "witness second matrix");
  recover->add_option("--r", rc_r, "witness denominator power");
  recover->add_option("--delta", rc_delta, "window parameter")
      ->capture_default_str();

  auto* bounds = app.add_subcommand(
      "bounds", "sup-norm sandwich and window report for one class term");
  std::string b_p, b_delta = "1/2";
  std::vector<std::string> b_denoms;
  bounds->add_option("--P", b_p, "numerator exponents")->required();
  bounds->add_option("--denom", b_denoms, "denominator matrix (repeatable)")
      ->required()
      ->allow_extra_args(false);  // keep bracketed JSON values intact
  bounds->add_option("--delta", b_delta, "window parameter")
      ->capture_default_str();

  auto* verify_all =
      app.add_subcommand("verify-all", "run the whole verification battery");
  std::string profile = "quick";
  verify_all->add_option("--profile", profile, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  for (CLI::App* sc : {coeffs, identities, pfrac, decompose, recover, bounds,
                       verify_all})
    sc->fallthrough();  // let --format/--seed/--out follow the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (coeffs->parsed()) return run_coeffs(out, n_max, extra);
    if (identities->parsed())
      return run_identities(out, id_n_max, id_b_max, corrupt);
    if (pfrac->parsed())
      return run_pfrac(out, kind, pm_m, pm_n, alpha_k, quad_c, quad_delta,
                       seed);
    if (decompose->parsed())
      return run_decompose(out, dd_p, dd_c, dd_d, dd_r, dd_delta, dd_samples,
                           seed);
    if (recover->parsed())
      return run_recover(out, counterexample, witness, rc_combo, rc_alpha,
                         rc_p, rc_c, rc_d, rc_r, rc_delta, seed);
    if (bounds->parsed()) return run_bounds(out, b_p, b_denoms, b_delta);
    if (verify_all->parsed()) return run_verify_all(out, profile);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
