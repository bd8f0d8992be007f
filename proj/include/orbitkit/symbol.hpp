#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbitkit/scalar.hpp"

namespace orbitkit {

/// Coordinate chart for symbols: variable names, which variables are
/// position-like, the conjugate partner of each variable and an optional
/// constant antisymmetric Poisson tensor Lambda.
struct Chart {
  std::string name;
  std::vector<std::string> vars;
  std::vector<bool> position;
  std::vector<int> partner;                     // index of the conjugate variable, -1 if none
  std::vector<std::vector<Rational>> lambda;    // empty when the chart carries no Poisson tensor

  int dim() const { return static_cast<int>(vars.size()); }
  int index_of(const std::string& var) const;
  bool has_lambda() const { return !lambda.empty(); }
};

using ChartPtr = std::shared_ptr<const Chart>;

/// (p, q) with Lambda^{pq} = 1.
ChartPtr chart_affr();
/// (z, zb, w, wb) with Lambda^{zw} = Lambda^{zb wb} = 2.
ChartPtr chart_affc();
/// (p, q) with Lambda^{pq} = -1, used as a sign mutation.
ChartPtr chart_affr_flipped();
/// (x, q): the partial Fourier side of the aff(R) chart.
ChartPtr chart_xq();
/// (u, ub): the operator chart for aff(C).
ChartPtr chart_uub();
/// (s, r) with s = q - x/2, r = q + x/2.
ChartPtr chart_sr();
/// "affR", "affC", "xq", "uub", "sr".
ChartPtr builtin_chart(const std::string& name);

bool same_chart(const ChartPtr& a, const ChartPtr& b);

/// Monomial x^a e^{lambda x} per variable.
struct Monomial {
  std::vector<int> pow;
  std::vector<Rational> expw;

  bool is_constant() const;
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.pow == b.pow && a.expw == b.expw; }
};

/// Finite sum of c * prod_i x_i^{a_i} e^{lambda_i x_i} over Q(i), canonical
/// (no repeated monomials, no zero coefficients).
class Symbol {
 public:
  explicit Symbol(ChartPtr chart);
  static Symbol constant(ChartPtr chart, const ScalarQ& c);
  static Symbol variable(ChartPtr chart, const std::string& var);
  /// c * e^{weight * var}
  static Symbol exponential(ChartPtr chart, const std::string& var, const Rational& weight, const ScalarQ& c = 1);
  static Symbol monomial(ChartPtr chart, Monomial m, const ScalarQ& c);

  const ChartPtr& chart() const { return chart_; }
  const std::map<Monomial, ScalarQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const ScalarQ& c);

  Symbol operator+(const Symbol& o) const;
  Symbol operator-(const Symbol& o) const;
  Symbol operator-() const;
  Symbol operator*(const Symbol& o) const;  // pointwise product
  Symbol operator*(const ScalarQ& s) const;
  Symbol& operator+=(const Symbol& o);

  Symbol derivative(int var, int order = 1) const;
  Symbol derivative(const std::string& var, int order = 1) const;

  /// Polynomial degree of var, or nullopt (unbounded) if any term carries an
  /// exponential weight in var. Zero symbol has degree 0.
  std::optional<int> degree(int var) const;

  /// Same terms on another chart with identical variable names.
  Symbol rechart(const ChartPtr& target) const;

  /// Complex conjugate of the coefficients only.
  Symbol conj_coeffs() const;

  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

  /// Human-readable form, e.g. "p*e^(q) + -1/2i*e^(q)".
  std::string str() const;

  friend bool operator==(const Symbol& a, const Symbol& b);

 private:
  void require_chart(const Symbol& o) const;
  ChartPtr chart_;
  std::map<Monomial, ScalarQ> terms_;
};

/// Rewrites a symbol under the linear substitution old_i = sum_j m[i][j] new_j.
Symbol linear_substitute(const Symbol& s, const ChartPtr& target, const std::vector<std::vector<Rational>>& m);

}  // namespace orbitkit
