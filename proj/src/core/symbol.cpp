#include "orbitkit/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

int Chart::index_of(const std::string& var) const {
  auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) fail(ErrorKind::InvalidInput, "variable '" + var + "' not in chart " + name);
  return static_cast<int>(it - vars.begin());
}

namespace {

std::vector<std::vector<Rational>> zeros(int n) {
  return std::vector<std::vector<Rational>>(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
}

ChartPtr make_affr(const std::string& name, int sign) {
  auto c = std::make_shared<Chart>();
  c->name = name;
  c->vars = {"p", "q"};
  c->position = {true, false};
  c->partner = {1, 0};
  c->lambda = zeros(2);
  c->lambda[0][1] = sign;
  c->lambda[1][0] = -sign;
  return c;
}

}  // namespace

ChartPtr chart_affr() {
  static const ChartPtr c = make_affr("affR", 1);
  return c;
}

ChartPtr chart_affr_flipped() {
  static const ChartPtr c = make_affr("affR-flipped", -1);
  return c;
}

ChartPtr chart_affc() {
  static const ChartPtr c = [] {
    auto ch = std::make_shared<Chart>();
    ch->name = "affC";
    ch->vars = {"z", "zb", "w", "wb"};
    ch->position = {true, true, false, false};
    ch->partner = {2, 3, 0, 1};
    ch->lambda = zeros(4);
    ch->lambda[0][2] = 2;
    ch->lambda[2][0] = -2;
    ch->lambda[1][3] = 2;
    ch->lambda[3][1] = -2;
    return ChartPtr(ch);
  }();
  return c;
}

namespace {
ChartPtr plain_chart(const std::string& name, std::vector<std::string> vars) {
  auto ch = std::make_shared<Chart>();
  ch->name = name;
  ch->position.assign(vars.size(), false);
  ch->partner.assign(vars.size(), -1);
  ch->vars = std::move(vars);
  return ch;
}
}  // namespace

ChartPtr chart_xq() {
  static const ChartPtr c = plain_chart("xq", {"x", "q"});
  return c;
}

ChartPtr chart_uub() {
  static const ChartPtr c = plain_chart("uub", {"u", "ub"});
  return c;
}

ChartPtr chart_sr() {
  static const ChartPtr c = plain_chart("sr", {"s", "r"});
  return c;
}

ChartPtr builtin_chart(const std::string& name) {
  if (name == "affR") return chart_affr();
  if (name == "affC") return chart_affc();
  if (name == "xq") return chart_xq();
  if (name == "uub") return chart_uub();
  if (name == "sr") return chart_sr();
  fail(ErrorKind::InvalidInput, "unknown chart '" + name + "'");
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a == b) return true;
  return a && b && a->name == b->name && a->vars == b->vars && a->lambda == b->lambda;
}

bool Monomial::is_constant() const {
  return std::all_of(pow.begin(), pow.end(), [](int a) { return a == 0; }) &&
         std::all_of(expw.begin(), expw.end(), [](const Rational& w) { return sgn(w) == 0; });
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.pow != b.pow) return a.pow < b.pow;
  for (std::size_t k = 0; k < a.expw.size(); ++k) {
    int c = cmp(a.expw[k], b.expw[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

Symbol::Symbol(ChartPtr chart) : chart_(std::move(chart)) {
  if (!chart_) fail(ErrorKind::InvalidInput, "null chart");
}

Symbol Symbol::constant(ChartPtr chart, const ScalarQ& c) {
  Symbol s(chart);
  Monomial m{std::vector<int>(static_cast<std::size_t>(chart->dim())), std::vector<Rational>(static_cast<std::size_t>(chart->dim()))};
  s.add_term(m, c);
  return s;
}

Symbol Symbol::variable(ChartPtr chart, const std::string& var) {
  Symbol s(chart);
  Monomial m{std::vector<int>(static_cast<std::size_t>(chart->dim())), std::vector<Rational>(static_cast<std::size_t>(chart->dim()))};
  m.pow[static_cast<std::size_t>(chart->index_of(var))] = 1;
  s.add_term(m, 1);
  return s;
}

Symbol Symbol::exponential(ChartPtr chart, const std::string& var, const Rational& weight, const ScalarQ& c) {
  Symbol s(chart);
  Monomial m{std::vector<int>(static_cast<std::size_t>(chart->dim())), std::vector<Rational>(static_cast<std::size_t>(chart->dim()))};
  m.expw[static_cast<std::size_t>(chart->index_of(var))] = weight;
  s.add_term(m, c);
  return s;
}

Symbol Symbol::monomial(ChartPtr chart, Monomial m, const ScalarQ& c) {
  if (static_cast<int>(m.pow.size()) != chart->dim() || static_cast<int>(m.expw.size()) != chart->dim())
    fail(ErrorKind::InvalidInput, "monomial arity does not match chart " + chart->name);
  for (int a : m.pow)
    if (a < 0) fail(ErrorKind::InvalidInput, "negative exponent in monomial");
  Symbol s(std::move(chart));
  s.add_term(m, c);
  return s;
}

void Symbol::add_term(const Monomial& m, const ScalarQ& c) {
  if (c.is_zero()) return;
  // map keys compare weights with mpq equality, which needs reduced fractions
  bool reduced = true;
  for (const auto& w : m.expw) reduced = reduced && (w.get_den() == 1 || gcd(w.get_num(), w.get_den()) == 1);
  if (!reduced) {
    Monomial key = m;
    for (auto& w : key.expw) w.canonicalize();
    return add_term(key, c);
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Symbol::require_chart(const Symbol& o) const {
  if (!same_chart(chart_, o.chart_))
    fail(ErrorKind::Mismatch, "symbols from different charts: " + chart_->name + " vs " + o.chart_->name);
}

Symbol& Symbol::operator+=(const Symbol& o) {
  require_chart(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Symbol Symbol::operator+(const Symbol& o) const {
  Symbol r = *this;
  r += o;
  return r;
}

Symbol Symbol::operator-() const { return *this * ScalarQ(-1); }

Symbol Symbol::operator-(const Symbol& o) const { return *this + (-o); }

Symbol Symbol::operator*(const ScalarQ& s) const {
  Symbol r(chart_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
  return r;
}

Symbol Symbol::operator*(const Symbol& o) const {
  require_chart(o);
  Symbol r(chart_);
  std::size_t n = static_cast<std::size_t>(chart_->dim());
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m{std::vector<int>(n), std::vector<Rational>(n)};
      for (std::size_t k = 0; k < n; ++k) {
        m.pow[k] = m1.pow[k] + m2.pow[k];
        m.expw[k] = m1.expw[k] + m2.expw[k];
      }
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

Symbol Symbol::derivative(int var, int order) const {
  if (var < 0 || var >= chart_->dim()) fail(ErrorKind::InvalidInput, "derivative variable out of range");
  auto k = static_cast<std::size_t>(var);
  Symbol cur = *this;
  for (int step = 0; step < order; ++step) {
    Symbol next(chart_);
    for (const auto& [m, c] : cur.terms_) {
      // d/dx x^a e^{w x} = a x^{a-1} e^{w x} + w x^a e^{w x}
      if (m.pow[k] > 0) {
        Monomial d = m;
        d.pow[k] -= 1;
        next.add_term(d, c * ScalarQ(static_cast<long>(m.pow[k])));
      }
      if (sgn(m.expw[k]) != 0) next.add_term(m, c * ScalarQ(m.expw[k]));
    }
    cur = std::move(next);
  }
  return cur;
}

Symbol Symbol::derivative(const std::string& var, int order) const { return derivative(chart_->index_of(var), order); }

std::optional<int> Symbol::degree(int var) const {
  auto k = static_cast<std::size_t>(var);
  int d = 0;
  for (const auto& [m, c] : terms_) {
    if (sgn(m.expw[k]) != 0) return std::nullopt;
    d = std::max(d, m.pow[k]);
  }
  return d;
}

Symbol Symbol::rechart(const ChartPtr& target) const {
  if (target->vars != chart_->vars) fail(ErrorKind::Mismatch, "cannot move symbol from chart " + chart_->name + " to " + target->name);
  Symbol r(target);
  r.terms_ = terms_;
  return r;
}

Symbol Symbol::conj_coeffs() const {
  Symbol r(chart_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c.conj());
  return r;
}

std::complex<double> Symbol::evaluate(const std::vector<std::complex<double>>& point) const {
  if (static_cast<int>(point.size()) != chart_->dim()) fail(ErrorKind::InvalidInput, "evaluation point arity mismatch");
  std::complex<double> total = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> v = c.to_complex();
    std::complex<double> expo = 0.0;
    for (std::size_t k = 0; k < point.size(); ++k) {
      if (m.pow[k] != 0) v *= std::pow(point[k], m.pow[k]);
      if (sgn(m.expw[k]) != 0) expo += m.expw[k].get_d() * point[k];
    }
    total += v * std::exp(expo);
  }
  return total;
}

std::string Symbol::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    for (std::size_t k = 0; k < m.pow.size(); ++k) {
      const auto& v = chart_->vars[k];
      if (m.pow[k] == 1) factors.push_back(v);
      else if (m.pow[k] > 1) factors.push_back(v + "^" + std::to_string(m.pow[k]));
    }
    std::string expo;
    for (std::size_t k = 0; k < m.expw.size(); ++k) {
      if (sgn(m.expw[k]) == 0) continue;
      std::string piece = m.expw[k] == 1 ? chart_->vars[k] : m.expw[k].get_str() + "*" + chart_->vars[k];
      if (!expo.empty()) expo += (sgn(m.expw[k]) > 0 ? "+" : "");
      expo += piece;
    }
    if (!expo.empty()) factors.push_back("e^(" + expo + ")");
    if (factors.empty()) {
      os << c.str();
      continue;
    }
    if (!c.is_one()) os << (c.is_real() ? c.str() : "(" + c.str() + ")") << "*";
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

bool operator==(const Symbol& a, const Symbol& b) { return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_; }

Symbol linear_substitute(const Symbol& s, const ChartPtr& target, const std::vector<std::vector<Rational>>& m) {
  const int n_old = s.chart()->dim();
  const int n_new = target->dim();
  if (static_cast<int>(m.size()) != n_old) fail(ErrorKind::InvalidInput, "substitution matrix has wrong row count");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n_new) fail(ErrorKind::InvalidInput, "substitution matrix has wrong column count");

  Symbol out(target);
  for (const auto& [mono, c] : s.terms()) {
    // Exponential part maps to a single exponential in the new variables.
    Monomial base{std::vector<int>(static_cast<std::size_t>(n_new)), std::vector<Rational>(static_cast<std::size_t>(n_new))};
    for (int i = 0; i < n_old; ++i)
      for (int j = 0; j < n_new; ++j) base.expw[static_cast<std::size_t>(j)] += mono.expw[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Symbol term = Symbol::monomial(target, base, c);
    for (int i = 0; i < n_old; ++i) {
      Symbol lin(target);
      for (int j = 0; j < n_new; ++j) {
        const auto& coeff = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (sgn(coeff) != 0) lin += Symbol::variable(target, target->vars[static_cast<std::size_t>(j)]) * ScalarQ(coeff);
      }
      for (int a = 0; a < mono.pow[static_cast<std::size_t>(i)]; ++a) term = term * lin;
    }
    out += term;
  }
  return out;
}

}  // namespace orbitkit
