#include "orbitkit/starprod.hpp"

#include <algorithm>
#include <limits>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

struct Entry {
  int i, j;
  Rational value;
};

std::vector<Entry> nonzero_entries(const std::vector<std::vector<Rational>>& lambda) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda[i].size(); ++j)
      if (sgn(lambda[i][j]) != 0) out.push_back({static_cast<int>(i), static_cast<int>(j), lambda[i][j]});
  return out;
}

Symbol apply_derivatives(const Symbol& s, const std::vector<int>& orders) {
  Symbol out = s;
  for (std::size_t k = 0; k < orders.size() && !out.is_zero(); ++k)
    if (orders[k] > 0) out = out.derivative(static_cast<int>(k), orders[k]);
  return out;
}

// Visits every composition n of r into entries.size() nonnegative parts.
template <class Fn>
void for_each_composition(int r, std::size_t parts, std::vector<int>& n, std::size_t pos, Fn&& fn) {
  if (pos + 1 == parts) {
    n[pos] = r;
    fn(n);
    return;
  }
  for (int k = 0; k <= r; ++k) {
    n[pos] = k;
    for_each_composition(r - k, parts, n, pos + 1, fn);
  }
}

constexpr int kUnbounded = std::numeric_limits<int>::max();

// Degree of var in one monomial: polynomial exponent, unbounded under an exponential.
int mono_degree(const Monomial& m, int var) {
  auto k = static_cast<std::size_t>(var);
  return sgn(m.expw[k]) != 0 ? kUnbounded : m.pow[k];
}

int order_bound(const Symbol& u, const Symbol& v, const std::vector<Entry>& entries) {
  int best = 0;
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      long total = 0;
      for (const auto& e : entries) {
        int m = std::min(mono_degree(mu, e.i), mono_degree(mv, e.j));
        if (m == kUnbounded)
          fail(ErrorKind::NonTerminating, "star product does not terminate: both factors carry exponentials in a conjugate pair of variables");
        total += m;
      }
      best = std::max(best, static_cast<int>(total));
    }
  }
  return best;
}

void require_lambda(const Symbol& u, const Symbol& v) {
  if (!same_chart(u.chart(), v.chart())) fail(ErrorKind::Mismatch, "star product of symbols in different charts");
  if (!u.chart()->has_lambda()) fail(ErrorKind::InvalidInput, "chart " + u.chart()->name + " carries no Poisson tensor");
}

Symbol weighted_series(const Symbol& u, const Symbol& v, const std::vector<std::vector<Rational>>& tensor, const ScalarQ& step) {
  int bound = order_bound(u, v, nonzero_entries(tensor));
  Symbol out = u * v;
  ScalarQ w(1);
  for (int r = 1; r <= bound; ++r) {
    w *= step * ScalarQ(Rational(1, r));
    Symbol term = bidifferential(u, v, r, tensor);
    if (!term.is_zero()) out += term * w;
  }
  return out;
}

}  // namespace

std::vector<BidiffTerm> bidifferential_terms(int r, const std::vector<std::vector<Rational>>& lambda) {
  if (r < 0) fail(ErrorKind::Precondition, "bidifferential order must be >= 0");
  std::size_t dim = lambda.size();
  if (r == 0) return {{Rational(1), std::vector<int>(dim), std::vector<int>(dim)}};
  auto entries = nonzero_entries(lambda);
  std::vector<BidiffTerm> out;
  if (entries.empty()) return out;
  Rational rfact = factorial(r);
  std::vector<int> n(entries.size());
  for_each_composition(r, entries.size(), n, 0, [&](const std::vector<int>& parts) {
    // Multinomial r!/prod n_e! times prod Lambda_e^{n_e}.
    BidiffTerm t{rfact, std::vector<int>(dim), std::vector<int>(dim)};
    for (std::size_t e = 0; e < entries.size(); ++e) {
      if (parts[e] == 0) continue;
      t.coeff /= factorial(parts[e]);
      for (int k = 0; k < parts[e]; ++k) t.coeff *= entries[e].value;
      t.du[static_cast<std::size_t>(entries[e].i)] += parts[e];
      t.dv[static_cast<std::size_t>(entries[e].j)] += parts[e];
    }
    out.push_back(std::move(t));
  });
  return out;
}

Symbol bidifferential(const Symbol& u, const Symbol& v, int r, const std::vector<std::vector<Rational>>& lambda) {
  Symbol out(u.chart());
  for (const auto& t : bidifferential_terms(r, lambda)) {
    Symbol a = apply_derivatives(u, t.du);
    if (a.is_zero()) continue;
    Symbol b = apply_derivatives(v, t.dv);
    if (b.is_zero()) continue;
    out += (a * b) * ScalarQ(t.coeff);
  }
  return out;
}

Symbol pr(const Symbol& u, const Symbol& v, int r) {
  require_lambda(u, v);
  if (r < 1) fail(ErrorKind::Precondition, "P^r needs r >= 1");
  return bidifferential(u, v, r, u.chart()->lambda);
}

std::vector<std::vector<Rational>> weyl_tensor(const Chart& chart) {
  std::size_t n = static_cast<std::size_t>(chart.dim());
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (!chart.position[x] || chart.partner[x] < 0) continue;
    auto xi = static_cast<std::size_t>(chart.partner[x]);
    t[xi][x] = 1;
    t[x][xi] = -1;
  }
  return t;
}

int star_order_bound(const Symbol& u, const Symbol& v) {
  require_lambda(u, v);
  return order_bound(u, v, nonzero_entries(u.chart()->lambda));
}

Symbol star(const Symbol& u, const Symbol& v, const StarConvention& conv) {
  require_lambda(u, v);
  if (conv.mode == StarMode::MoyalHalfI) {
    ScalarQ step = (ScalarQ(2) * ScalarQ::i()).inverse();  // 1/(2i)
    return weighted_series(u, v, u.chart()->lambda, step);
  }
  ScalarQ step(Rational(0), Rational(conv.h / 2));  // i h / 2
  return weighted_series(u, v, weyl_tensor(*u.chart()), step);
}

std::vector<Symbol> star_formal(const Symbol& u, const Symbol& v) {
  int bound = star_order_bound(u, v);
  std::vector<Symbol> out;
  out.push_back(u * v);
  for (int r = 1; r <= bound; ++r) out.push_back(pr(u, v, r) * ScalarQ(Rational(1) / factorial(r)));
  return out;
}

std::vector<PairCheck> star_commutator_check(const LieAlgebraPtr& alg, const ChartPtr& chart) {
  std::vector<PairCheck> out;
  ScalarQ i = ScalarQ::i();
  for (int a = 0; a < alg->dim(); ++a) {
    for (int b = 0; b < alg->dim(); ++b) {
      auto za = AlgElement::basis(alg, a), zb = AlgElement::basis(alg, b);
      Symbol ha = hamiltonian(za).rechart(chart) * i;
      Symbol hb = hamiltonian(zb).rechart(chart) * i;
      Symbol value = star(ha, hb) - star(hb, ha);
      Symbol expected = hamiltonian(bracket(za, zb)).rechart(chart) * i;
      Symbol res = value - expected;
      out.push_back({alg->basis()[static_cast<std::size_t>(a)], alg->basis()[static_cast<std::size_t>(b)], res.is_zero(),
                     value.str(), expected.str(), res.str()});
    }
  }
  return out;
}

}  // namespace orbitkit
