#include "orbitkit/genus.hpp"

#include <sstream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

int GradedClassSeries::degree_of(const std::vector<int>& exps) const {
  int d = 0;
  for (std::size_t k = 0; k < exps.size(); ++k) d += exps[k] * weights[k];
  return d;
}

ClassPoly GradedClassSeries::component(int degree) const {
  ClassPoly out;
  for (const auto& [e, c] : poly)
    if (degree_of(e) == degree) out.emplace(e, c);
  return out;
}

std::string GradedClassSeries::component_str(int degree) const {
  auto comp = component(degree);
  if (comp.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in descending lexicographic exponent order (c1^2 before c2).
  for (auto it = comp.rbegin(); it != comp.rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant = true;
    for (int a : e) constant = constant && a == 0;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    Rational shown = first ? c : Rational(abs(c));
    first = false;
    if (constant) {
      os << shown.get_str();
      continue;
    }
    if (shown != 1) os << (shown == -1 ? std::string("-") : shown.get_str() + "*");
    bool first_factor = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << generators[k];
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

std::string GradedClassSeries::str() const {
  std::ostringstream os;
  for (int d = 0; d <= cap; ++d) os << (d ? " | " : "") << "[" << d << "] " << component_str(d);
  return os.str();
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b, int cap) {
  PowerSeries c(static_cast<std::size_t>(cap + 1));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= cap; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= cap; ++j) c[i + j] += a[i] * b[j];
  return c;
}

namespace {

Rational at(const PowerSeries& a, int k) { return k < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k)] : Rational(0); }

PowerSeries series_inverse(const PowerSeries& a, int cap) {
  if (sgn(at(a, 0)) == 0) fail(ErrorKind::Precondition, "series has no inverse (zero constant term)");
  PowerSeries b(static_cast<std::size_t>(cap + 1));
  b[0] = 1 / at(a, 0);
  for (int k = 1; k <= cap; ++k) {
    Rational s;
    for (int j = 1; j <= k; ++j) s += at(a, j) * b[static_cast<std::size_t>(k - j)];
    b[static_cast<std::size_t>(k)] = -s * b[0];
  }
  return b;
}

}  // namespace

PowerSeries series_log(const PowerSeries& a, int cap) {
  if (at(a, 0) != 1) fail(ErrorKind::Precondition, "log needs constant term 1");
  // k a_k = sum_{j=1}^{k} j b_j a_{k-j}
  PowerSeries b(static_cast<std::size_t>(cap + 1));
  for (int k = 1; k <= cap; ++k) {
    Rational s = k * at(a, k);
    for (int j = 1; j < k; ++j) s -= j * b[static_cast<std::size_t>(j)] * at(a, k - j);
    b[static_cast<std::size_t>(k)] = s / k;
  }
  return b;
}

PowerSeries series_exp(const PowerSeries& b, int cap) {
  if (sgn(at(b, 0)) != 0) fail(ErrorKind::Precondition, "exp needs constant term 0");
  PowerSeries e(static_cast<std::size_t>(cap + 1));
  e[0] = 1;
  for (int k = 1; k <= cap; ++k) {
    Rational s;
    for (int j = 1; j <= k; ++j) s += j * at(b, j) * e[static_cast<std::size_t>(k - j)];
    e[static_cast<std::size_t>(k)] = s / k;
  }
  return e;
}

PowerSeries todd_q(int cap) {
  // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
  PowerSeries d(static_cast<std::size_t>(cap + 1));
  for (int k = 0; k <= cap; ++k) d[static_cast<std::size_t>(k)] = Rational(k % 2 ? -1 : 1) / factorial(k + 1);
  return series_inverse(d, cap);
}

PowerSeries ahat_q_root(int cap) {
  // sinh(x/2)/(x/2) = sum_k (x/2)^{2k} / (2k+1)!
  PowerSeries d(static_cast<std::size_t>(cap + 1));
  for (int k = 0; 2 * k <= cap; ++k) {
    Rational pw(1);
    for (int j = 0; j < 2 * k; ++j) pw /= 2;
    d[static_cast<std::size_t>(2 * k)] = pw / factorial(2 * k + 1);
  }
  return series_inverse(d, cap);
}

PowerSeries ahat_q_pontryagin(int cap) {
  PowerSeries d(static_cast<std::size_t>(cap + 1));
  for (int k = 0; k <= cap; ++k) {
    Rational pw(1);
    for (int j = 0; j < k; ++j) pw /= 4;
    d[static_cast<std::size_t>(k)] = pw / factorial(2 * k + 1);
  }
  return series_inverse(d, cap);
}

ClassPoly poly_add(const ClassPoly& a, const ClassPoly& b) {
  ClassPoly r = a;
  for (const auto& [e, c] : b) {
    auto& slot = r[e];
    slot += c;
    if (sgn(slot) == 0) r.erase(e);
  }
  return r;
}

ClassPoly poly_scale(const ClassPoly& a, const Rational& s) {
  ClassPoly r;
  if (sgn(s) == 0) return r;
  for (const auto& [e, c] : a) r.emplace(e, c * s);
  return r;
}

ClassPoly poly_mul(const ClassPoly& a, const ClassPoly& b, const std::vector<int>& weights, int cap) {
  ClassPoly r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      int deg = 0;
      for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = ea[k] + eb[k];
        deg += e[k] * weights[k];
      }
      if (deg > cap) continue;
      r[e] += ca * cb;
    }
  }
  std::erase_if(r, [](const auto& t) { return sgn(t.second) == 0; });
  return r;
}

namespace {

ClassPoly constant_poly(std::size_t nvars, const Rational& c) {
  ClassPoly p;
  if (sgn(c) != 0) p.emplace(std::vector<int>(nvars), c);
  return p;
}

ClassPoly generator_poly(std::size_t nvars, std::size_t k) {
  std::vector<int> e(nvars);
  e[k] = 1;
  return {{e, Rational(1)}};
}

// Power sums P_1..P_n in elementary symmetric generators e_1..e_m (m generators,
// e_k = 0 for k > m) via Newton's identities.
std::vector<ClassPoly> power_sums(int n, int m, const std::vector<int>& weights) {
  auto nv = static_cast<std::size_t>(m);
  std::vector<ClassPoly> P(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) {
    ClassPoly s;
    for (int i = 1; i < k; ++i) {
      if (i > m) break;
      ClassPoly t = poly_mul(generator_poly(nv, static_cast<std::size_t>(i - 1)), P[static_cast<std::size_t>(k - i)], weights, n);
      s = poly_add(s, poly_scale(t, Rational(i % 2 ? 1 : -1)));
    }
    if (k <= m) s = poly_add(s, poly_scale(generator_poly(nv, static_cast<std::size_t>(k - 1)), Rational(k % 2 ? k : -k)));
    P[static_cast<std::size_t>(k)] = s;
  }
  return P;
}

ClassPoly poly_exp(const ClassPoly& s, std::size_t nvars, const std::vector<int>& weights, int cap) {
  ClassPoly total = constant_poly(nvars, Rational(1));
  ClassPoly power = constant_poly(nvars, Rational(1));
  for (int m = 1; m <= cap; ++m) {
    power = poly_mul(power, s, weights, cap);
    if (power.empty()) break;
    total = poly_add(total, poly_scale(power, Rational(1) / factorial(m)));
  }
  return total;
}

GradedClassSeries make_series(const std::string& prefix, int m, int cap) {
  GradedClassSeries s;
  for (int k = 1; k <= m; ++k) {
    s.generators.push_back(prefix + std::to_string(k));
    s.weights.push_back(k);
  }
  s.cap = cap;
  return s;
}

}  // namespace

GradedClassSeries multiplicative_sequence(const PowerSeries& q, int n, const std::string& prefix) {
  if (n < 0) fail(ErrorKind::InvalidInput, "degree must be >= 0");
  GradedClassSeries out = make_series(prefix, n, n);
  auto nv = static_cast<std::size_t>(n);
  if (n == 0) {
    out.poly = constant_poly(nv, Rational(1));
    return out;
  }
  PowerSeries a = series_log(q, n);
  auto P = power_sums(n, n, out.weights);
  ClassPoly s;
  for (int k = 1; k <= n; ++k) s = poly_add(s, poly_scale(P[static_cast<std::size_t>(k)], at(a, k)));
  out.poly = poly_exp(s, nv, out.weights, n);
  return out;
}

GradedClassSeries todd_series(int n) { return multiplicative_sequence(todd_q(n), n, "c"); }

GradedClassSeries ahat_series(int n) { return multiplicative_sequence(ahat_q_pontryagin(n), n, "p"); }

bool ahat_twist_equals_todd(int n, const Rational& theta) {
  if (n < 0) fail(ErrorKind::InvalidInput, "degree must be >= 0");
  if (n == 0) return true;
  auto nv = static_cast<std::size_t>(n);
  std::vector<int> weights(nv, 1);
  PowerSeries qa = ahat_q_root(n), qt = todd_q(n);
  // e^{theta x}
  PowerSeries twist(nv + 1);
  Rational pw(1);
  for (int k = 0; k <= n; ++k) {
    twist[static_cast<std::size_t>(k)] = pw / factorial(k);
    pw *= theta;
  }
  PowerSeries lhs_root = series_mul(qa, twist, n);
  ClassPoly lhs = constant_poly(nv, Rational(1)), rhs = constant_poly(nv, Rational(1));
  for (std::size_t i = 0; i < nv; ++i) {
    ClassPoly fl, fr;
    for (int k = 0; k <= n; ++k) {
      std::vector<int> e(nv);
      e[i] = k;
      if (sgn(lhs_root[static_cast<std::size_t>(k)]) != 0) fl.emplace(e, lhs_root[static_cast<std::size_t>(k)]);
      if (sgn(qt[static_cast<std::size_t>(k)]) != 0) fr.emplace(e, qt[static_cast<std::size_t>(k)]);
    }
    lhs = poly_mul(lhs, fl, weights, n);
    rhs = poly_mul(rhs, fr, weights, n);
  }
  return lhs == rhs;
}

GradedClassSeries chern_character(int rank, int n) {
  if (rank < 0 || n < 0) fail(ErrorKind::InvalidInput, "rank and degree must be >= 0");
  GradedClassSeries out = make_series("c", rank, n);
  auto nv = static_cast<std::size_t>(rank);
  out.poly = constant_poly(nv, Rational(rank));
  auto P = power_sums(n, rank, out.weights);
  for (int k = 1; k <= n; ++k) out.poly = poly_add(out.poly, poly_scale(P[static_cast<std::size_t>(k)], Rational(1) / factorial(k)));
  return out;
}

std::vector<Rational> evaluate_at_roots(const GradedClassSeries& s, const std::vector<Rational>& roots) {
  // e_k(roots) by the recurrence prod (1 + r t).
  std::vector<Rational> e(roots.size() + 1);
  e[0] = 1;
  for (const auto& r : roots)
    for (std::size_t k = roots.size(); k >= 1; --k) e[k] += r * e[k - 1];
  std::vector<Rational> out(static_cast<std::size_t>(s.cap + 1));
  for (const auto& [exps, c] : s.poly) {
    Rational v = c;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      // generator k is the elementary symmetric function of degree weights[k]
      auto deg = static_cast<std::size_t>(s.weights[k]);
      Rational ek = deg < e.size() ? e[deg] : Rational(0);
      for (int a = 0; a < exps[k]; ++a) v *= ek;
    }
    out[static_cast<std::size_t>(s.degree_of(exps))] += v;
  }
  return out;
}

ClassPoly mod2(const ClassPoly& a) {
  ClassPoly r;
  for (const auto& [e, c] : a) {
    if (c.get_den() != 1) fail(ErrorKind::InvalidInput, "mod 2 reduction needs integer coefficients");
    mpz_class m = c.get_num() % 2;
    if (m != 0) r.emplace(e, Rational(1));
  }
  return r;
}

ClassPoly sw_total_product(const ClassPoly& a, const ClassPoly& b, const std::vector<int>& weights, int cap) {
  return mod2(poly_mul(mod2(a), mod2(b), weights, cap));
}

}  // namespace orbitkit
