#include "orbitkit/operator_expr.hpp"

#include <sstream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

OperatorExpr::OperatorExpr(ChartPtr chart) : chart_(std::move(chart)) {
  if (!chart_) fail(ErrorKind::InvalidInput, "null chart");
}

OperatorExpr OperatorExpr::multiplication(const Symbol& s) {
  OperatorExpr op(s.chart());
  op.add_term(std::vector<int>(static_cast<std::size_t>(s.chart()->dim())), s);
  return op;
}

OperatorExpr OperatorExpr::derivative(ChartPtr chart, std::vector<int> orders, const ScalarQ& c) {
  if (static_cast<int>(orders.size()) != chart->dim()) fail(ErrorKind::InvalidInput, "derivative multi-index arity mismatch");
  for (int a : orders)
    if (a < 0) fail(ErrorKind::InvalidInput, "negative derivative order");
  OperatorExpr op(chart);
  op.add_term(orders, Symbol::constant(chart, c));
  return op;
}

OperatorExpr OperatorExpr::derivative(ChartPtr chart, const std::string& var, const ScalarQ& c) {
  std::vector<int> orders(static_cast<std::size_t>(chart->dim()));
  orders[static_cast<std::size_t>(chart->index_of(var))] = 1;
  return derivative(std::move(chart), std::move(orders), c);
}

int OperatorExpr::order() const {
  int best = 0;
  for (const auto& [d, c] : terms_) {
    int s = 0;
    for (int a : d) s += a;
    best = std::max(best, s);
  }
  return best;
}

void OperatorExpr::require_chart(const ChartPtr& c) const {
  if (!same_chart(chart_, c)) fail(ErrorKind::Mismatch, "operator chart mismatch: " + chart_->name + " vs " + c->name);
}

void OperatorExpr::add_term(const std::vector<int>& orders, const Symbol& coeff) {
  require_chart(coeff.chart());
  if (coeff.is_zero()) return;
  auto it = terms_.find(orders);
  if (it == terms_.end()) {
    terms_.emplace(orders, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& o) const {
  require_chart(o.chart_);
  OperatorExpr r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

OperatorExpr OperatorExpr::operator-(const OperatorExpr& o) const { return *this + o * ScalarQ(-1); }

OperatorExpr OperatorExpr::operator*(const ScalarQ& s) const {
  OperatorExpr r(chart_);
  for (const auto& [d, c] : terms_) r.add_term(d, c * s);
  return r;
}

namespace {

Symbol derive(const Symbol& s, const std::vector<int>& orders) {
  Symbol out = s;
  for (std::size_t k = 0; k < orders.size() && !out.is_zero(); ++k)
    if (orders[k] > 0) out = out.derivative(static_cast<int>(k), orders[k]);
  return out;
}

// Visits every gamma <= alpha componentwise.
template <class Fn>
void for_each_sub_index(const std::vector<int>& alpha, std::vector<int>& gamma, std::size_t pos, Fn&& fn) {
  if (pos == alpha.size()) {
    fn(gamma);
    return;
  }
  for (int g = 0; g <= alpha[pos]; ++g) {
    gamma[pos] = g;
    for_each_sub_index(alpha, gamma, pos + 1, fn);
  }
}

}  // namespace

Symbol OperatorExpr::apply(const Symbol& f) const {
  require_chart(f.chart());
  Symbol out(chart_);
  for (const auto& [d, c] : terms_) out += c * derive(f, d);
  return out;
}

std::string OperatorExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 0) continue;
      os << "*d_" << chart_->vars[k];
      if (d[k] > 1) os << "^" << d[k];
    }
  }
  return os.str();
}

bool operator==(const OperatorExpr& a, const OperatorExpr& b) { return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_; }

OperatorExpr op_compose(const OperatorExpr& a, const OperatorExpr& b) {
  if (!same_chart(a.chart(), b.chart())) fail(ErrorKind::Mismatch, "cannot compose operators on different charts");
  OperatorExpr out(a.chart());
  std::size_t n = static_cast<std::size_t>(a.chart()->dim());
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) {
      // c_a d^alpha (c_b d^beta) = sum_{gamma <= alpha} C(alpha, gamma) c_a (d^gamma c_b) d^{alpha - gamma + beta}
      std::vector<int> gamma(n);
      for_each_sub_index(alpha, gamma, 0, [&](const std::vector<int>& g) {
        Rational binom(1);
        std::vector<int> rest(n);
        for (std::size_t k = 0; k < n; ++k) {
          binom *= binomial(alpha[k], g[k]);
          rest[k] = alpha[k] - g[k] + beta[k];
        }
        Symbol dcb = derive(cb, g);
        if (dcb.is_zero()) return;
        out.add_term(rest, ca * dcb * ScalarQ(binom));
      });
    }
  }
  return out;
}

OperatorExpr op_commutator(const OperatorExpr& a, const OperatorExpr& b) { return op_compose(a, b) - op_compose(b, a); }

OperatorExpr op_linear_change(const OperatorExpr& op, const ChartPtr& target,
                              const std::vector<std::vector<Rational>>& coeff_map,
                              const std::vector<std::vector<Rational>>& deriv_map) {
  const std::size_t n_old = static_cast<std::size_t>(op.chart()->dim());
  const std::size_t n_new = static_cast<std::size_t>(target->dim());
  if (deriv_map.size() != n_old) fail(ErrorKind::InvalidInput, "derivative map has wrong row count");
  for (const auto& row : deriv_map)
    if (row.size() != n_new) fail(ErrorKind::InvalidInput, "derivative map has wrong column count");

  // Constant-coefficient derivative polynomials as maps multi-index -> coefficient.
  using DPoly = std::map<std::vector<int>, Rational>;
  auto mul = [&](const DPoly& a, const DPoly& b) {
    DPoly r;
    for (const auto& [ia, ca] : a)
      for (const auto& [ib, cb] : b) {
        std::vector<int> idx(n_new);
        for (std::size_t k = 0; k < n_new; ++k) idx[k] = ia[k] + ib[k];
        r[idx] += ca * cb;
      }
    std::erase_if(r, [](const auto& e) { return sgn(e.second) == 0; });
    return r;
  };
  std::vector<DPoly> linear(n_old);
  for (std::size_t i = 0; i < n_old; ++i)
    for (std::size_t j = 0; j < n_new; ++j) {
      if (sgn(deriv_map[i][j]) == 0) continue;
      std::vector<int> idx(n_new);
      idx[j] = 1;
      linear[i][idx] = deriv_map[i][j];
    }

  OperatorExpr out(target);
  for (const auto& [alpha, c] : op.terms()) {
    DPoly expanded{{std::vector<int>(n_new), Rational(1)}};
    for (std::size_t i = 0; i < n_old; ++i)
      for (int k = 0; k < alpha[i]; ++k) expanded = mul(expanded, linear[i]);
    Symbol coeff = linear_substitute(c, target, coeff_map);
    for (const auto& [idx, r] : expanded) out.add_term(idx, coeff * ScalarQ(r));
  }
  return out;
}

}  // namespace orbitkit
