#include "orbitkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

ScalarQ scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return ScalarQ(Rational(j.get<long>()));
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  bad("scalar must be a string or an integer");
}

Json scalar_to_json(const ScalarQ& s) { return s.str(); }

Rational rational_from_json(const Json& j) {
  ScalarQ s = scalar_from_json(j);
  if (!s.is_real()) bad("expected a rational, got " + s.str());
  return s.re();
}

namespace {

bool compact_terms(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) return false;
  for (const auto& t : j.at("terms"))
    if (t.is_object() && (t.contains("c") || t.contains("p") || t.contains("q"))) return true;
  return false;
}

std::vector<int> slots(const Chart& chart, bool position) {
  std::vector<int> out;
  for (int k = 0; k < chart.dim(); ++k)
    if (chart.position[static_cast<std::size_t>(k)] == position) out.push_back(k);
  return out;
}

ScalarQ compact_coeff(const Json& c) {
  if (!c.is_array()) return scalar_from_json(c);
  if (c.size() != 2) bad("'c' must be [re, im]");
  auto part = [](const Json& x) {
    if (x.is_number_integer()) return Rational(x.get<long>());
    if (x.is_string()) return parse_rational(x.get<std::string>());
    bad("coefficient parts must be integers or rational strings");
  };
  return ScalarQ(part(c[0]), part(c[1]));
}

// {"terms":[{"c":[re,im],"p":[..],"q":[..],"exp":[..]}]}: p lists powers of the
// polynomial-side variables, q and exp the powers and exponential weights of
// their partners. The chart follows from len(p) unless given.
Symbol compact_symbol_from_json(const Json& j) {
  std::size_t np = 0;
  for (const auto& t : j.at("terms"))
    if (t.contains("p") && t.at("p").is_array()) np = std::max(np, t.at("p").size());
  std::string name = j.contains("chart") ? j.at("chart").get<std::string>() : (np >= 2 ? "affC" : "affR");
  ChartPtr chart = builtin_chart(name);
  const auto ps = slots(*chart, true), qs = slots(*chart, false);
  Symbol s(chart);
  for (const auto& t : j.at("terms")) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(chart->dim()), 0), std::vector<Rational>(static_cast<std::size_t>(chart->dim()))};
    auto fill_pow = [&](const char* key, const std::vector<int>& idx) {
      if (!t.contains(key)) return;
      const Json& a = t.at(key);
      if (!a.is_array() || a.size() > idx.size()) bad(std::string("'") + key + "' has too many entries for chart " + name);
      for (std::size_t i = 0; i < a.size(); ++i) {
        int e = int_from_json(a[i], "power");
        if (e < 0) bad("powers must be >= 0");
        m.pow[static_cast<std::size_t>(idx[i])] = e;
      }
    };
    fill_pow("p", ps);
    fill_pow("q", qs);
    if (t.contains("exp")) {
      const Json& a = t.at("exp");
      if (!a.is_array() || a.size() > qs.size()) bad("'exp' has too many entries for chart " + name);
      for (std::size_t i = 0; i < a.size(); ++i) m.expw[static_cast<std::size_t>(qs[i])] = rational_from_json(a[i]);
    }
    s.add_term(m, t.contains("c") ? compact_coeff(t.at("c")) : ScalarQ(1));
  }
  return s;
}

Json rational_value(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

}  // namespace

Json symbol_to_compact_json(const Symbol& s) {
  const auto& chart = *s.chart();
  const auto ps = slots(chart, true), qs = slots(chart, false);
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json p = Json::array(), q = Json::array(), ex = Json::array();
    for (int k : ps) p.push_back(m.pow[static_cast<std::size_t>(k)]);
    for (int k : qs) {
      q.push_back(m.pow[static_cast<std::size_t>(k)]);
      ex.push_back(rational_value(m.expw[static_cast<std::size_t>(k)]));
    }
    terms.push_back(Json{{"c", Json::array({rational_value(c.re()), rational_value(c.im())})}, {"p", p}, {"q", q}, {"exp", ex}});
  }
  return Json{{"chart", chart.name}, {"terms", terms}, {"text", s.str()}};
}

Symbol symbol_from_json(const Json& j) {
  if (compact_terms(j)) return compact_symbol_from_json(j);
  ChartPtr chart = builtin_chart(field(j, "chart").get<std::string>());
  Symbol s(chart);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  for (const auto& t : terms) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(chart->dim()), 0), std::vector<Rational>(static_cast<std::size_t>(chart->dim()))};
    if (t.contains("pow")) {
      for (const auto& [var, e] : t.at("pow").items()) {
        int k = chart->index_of(var);
        int p = int_from_json(e, "power");
        if (p < 0) bad("powers must be >= 0");
        m.pow[static_cast<std::size_t>(k)] = p;
      }
    }
    if (t.contains("exp")) {
      for (const auto& [var, w] : t.at("exp").items()) m.expw[static_cast<std::size_t>(chart->index_of(var))] = rational_from_json(w);
    }
    s.add_term(m, t.contains("coeff") ? scalar_from_json(t.at("coeff")) : ScalarQ(1));
  }
  return s;
}

Json symbol_to_json(const Symbol& s) {
  Json terms = Json::array();
  const auto& chart = *s.chart();
  for (const auto& [m, c] : s.terms()) {
    Json t;
    t["coeff"] = scalar_to_json(c);
    Json pow = Json::object(), ex = Json::object();
    for (int k = 0; k < chart.dim(); ++k) {
      if (m.pow[static_cast<std::size_t>(k)] != 0) pow[chart.vars[static_cast<std::size_t>(k)]] = m.pow[static_cast<std::size_t>(k)];
      if (sgn(m.expw[static_cast<std::size_t>(k)]) != 0) ex[chart.vars[static_cast<std::size_t>(k)]] = to_string(m.expw[static_cast<std::size_t>(k)]);
    }
    if (!pow.empty()) t["pow"] = pow;
    if (!ex.empty()) t["exp"] = ex;
    terms.push_back(t);
  }
  return Json{{"chart", chart.name}, {"terms", terms}, {"text", s.str()}};
}

LieAlgebraPtr lie_algebra_from_json(const Json& j) {
  if (j.is_string()) return builtin_algebra(j.get<std::string>());
  const Json& basis = field(j, "basis");
  if (!basis.is_array() || basis.empty()) bad("'basis' must be a nonempty array");
  auto names = basis.get<std::vector<std::string>>();
  auto alg = std::make_shared<LieAlgebraSpec>(j.value("name", std::string("custom")), names);
  if (j.contains("brackets")) {
    for (const auto& br : j.at("brackets")) {
      int i = int_from_json(field(br, "i"), "i"), k = int_from_json(field(br, "j"), "j");
      std::vector<ScalarQ> coeffs;
      for (const auto& c : field(br, "coeffs")) coeffs.push_back(scalar_from_json(c));
      if (i < 0 || k < 0 || i >= alg->dim() || k >= alg->dim()) bad("bracket index out of range");
      alg->set_bracket(i, k, coeffs);
    }
  }
  return alg;
}

Json lie_algebra_to_json(const LieAlgebraSpec& a) {
  Json brackets = Json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      Json coeffs = Json::array();
      bool nonzero = false;
      for (int k = 0; k < a.dim(); ++k) {
        coeffs.push_back(scalar_to_json(a.structure(i, j, k)));
        nonzero = nonzero || !a.structure(i, j, k).is_zero();
      }
      if (nonzero) brackets.push_back(Json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return Json{{"name", a.name()}, {"basis", a.basis()}, {"brackets", brackets}};
}

FDAlgebra fd_algebra_from_json(const Json& j) {
  if (j.is_string()) return builtin_fd_algebra(j.get<std::string>());
  FDAlgebra a;
  a.name = j.value("name", std::string("custom"));
  a.labels = field(j, "labels").get<std::vector<std::string>>();
  const std::size_t n = a.labels.size();
  const Json& mult = field(j, "mult");
  if (!mult.is_array() || mult.size() != n) bad("'mult' must be an n x n x n array");
  for (const auto& row : mult) {
    if (!row.is_array() || row.size() != n) bad("'mult' must be an n x n x n array");
    std::vector<std::vector<ScalarQ>> r;
    for (const auto& v : row) {
      if (!v.is_array() || v.size() != n) bad("'mult' must be an n x n x n array");
      std::vector<ScalarQ> vec;
      for (const auto& c : v) vec.push_back(scalar_from_json(c));
      r.push_back(std::move(vec));
    }
    a.mult.push_back(std::move(r));
  }
  for (const auto& c : field(j, "unit")) a.unit.push_back(scalar_from_json(c));
  if (a.unit.size() != n) bad("'unit' has the wrong length");
  return a;
}

SimplicialComplex complex_from_json(const Json& j, const std::string& name) {
  const Json& s = field(j, "simplices");
  if (!s.is_object()) bad("'simplices' must be an object keyed by dimension");
  std::vector<std::vector<Simplex>> lists;
  for (const auto& [key, list] : s.items()) {
    int dim = 0;
    try {
      std::size_t used = 0;
      dim = std::stoi(key, &used);
      if (used != key.size() || dim < 0 || dim > 32) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      bad("bad dimension key '" + key + "'");
    }
    if (!list.is_array()) bad("simplex list must be an array");
    if (static_cast<int>(lists.size()) <= dim) lists.resize(static_cast<std::size_t>(dim + 1));
    for (const auto& simplex : list) {
      Simplex sx;
      if (simplex.is_array()) {
        for (const auto& v : simplex) sx.push_back(int_from_json(v, "vertex"));
      } else {
        sx.push_back(int_from_json(simplex, "vertex"));
      }
      lists[static_cast<std::size_t>(dim)].push_back(std::move(sx));
    }
  }
  return make_complex(name, std::move(lists));
}

LaurentMatrix laurent_matrix_from_json(const Json& j) {
  const Json& m = field(j, "matrix");
  if (!m.is_array() || m.empty()) bad("'matrix' must be a nonempty array of rows");
  LaurentMatrix g;
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != m.size()) bad("'matrix' must be square");
    std::vector<Laurent> r;
    for (const auto& entry : row) {
      Laurent l;
      if (entry.is_array()) {
        for (const auto& term : entry) {
          if (!term.is_array() || term.size() != 2) bad("Laurent term must be [exponent, coeff]");
          l += Laurent(scalar_from_json(term[1]), int_from_json(term[0], "exponent"));
        }
      } else {
        l = Laurent(scalar_from_json(entry));
      }
      r.push_back(std::move(l));
    }
    g.push_back(std::move(r));
  }
  return g;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    bad("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace orbitkit
