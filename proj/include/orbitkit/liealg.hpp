#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "orbitkit/scalar.hpp"

namespace orbitkit {

using ScalarMatrix = std::vector<std::vector<ScalarQ>>;
using RealMatrix = std::vector<std::vector<double>>;

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k.
class LieAlgebraSpec {
 public:
  LieAlgebraSpec(std::string name, std::vector<std::string> basis);

  /// Sets [e_i, e_j] = coeffs and [e_j, e_i] = -coeffs.
  void set_bracket(int i, int j, std::vector<ScalarQ> coeffs);
  /// Sets only [e_i, e_j]; allows building non-antisymmetric tables for testing.
  void set_bracket_raw(int i, int j, std::vector<ScalarQ> coeffs);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  int index_of(const std::string& basis_name) const;

  const ScalarQ& structure(int i, int j, int k) const {
    return c_[static_cast<std::size_t>((i * dim() + j) * dim() + k)];
  }

  bool is_antisymmetric() const;

  friend bool operator==(const LieAlgebraSpec& a, const LieAlgebraSpec& b) {
    return a.name_ == b.name_ && a.basis_ == b.basis_ && a.c_ == b.c_;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<ScalarQ> c_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebraSpec>;

/// aff(R): basis (X, Y), [X, Y] = Y.
LieAlgebraPtr aff_r();
/// aff(C) as a real 4-dimensional algebra, basis (X1, X2, Y1, Y2):
/// [X1,Y1] = Y1, [X1,Y2] = Y2, [X2,Y1] = Y2, [X2,Y2] = -Y1.
LieAlgebraPtr aff_c();
/// "affR" or "affC".
LieAlgebraPtr builtin_algebra(const std::string& name);

class AlgElement {
 public:
  AlgElement(LieAlgebraPtr algebra, std::vector<ScalarQ> coords);
  static AlgElement zero(LieAlgebraPtr algebra);
  static AlgElement basis(LieAlgebraPtr algebra, int index);
  static AlgElement basis(LieAlgebraPtr algebra, const std::string& name);

  const LieAlgebraPtr& algebra() const { return algebra_; }
  const std::vector<ScalarQ>& coords() const { return coords_; }
  const ScalarQ& operator[](int k) const { return coords_[static_cast<std::size_t>(k)]; }
  bool is_zero() const;

  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator-(const AlgElement& o) const;
  AlgElement operator*(const ScalarQ& s) const;

  friend bool operator==(const AlgElement& a, const AlgElement& b);

 private:
  LieAlgebraPtr algebra_;
  std::vector<ScalarQ> coords_;
};

AlgElement bracket(const AlgElement& a, const AlgElement& b);

/// Matrix of v -> [u, v] in the algebra's basis (column j = [u, e_j]).
ScalarMatrix ad_matrix(const AlgElement& u);

/// Exact truncated series sum_{n < terms} (-ad_u)^n / n!.
ScalarMatrix exp_neg_ad_series(const AlgElement& u, int terms);
/// Floating-point series, for real coordinates that are not rational.
RealMatrix exp_neg_ad_series(const RealMatrix& neg_ad, int terms);

/// Linear combination of exponential atoms sum_k c_k * exp(r_k) with
/// rational c_k and r_k; exact stand-in for e^{-alpha} expressions.
class ExpPoly {
 public:
  ExpPoly() = default;
  explicit ExpPoly(const Rational& constant);
  static ExpPoly atom(const Rational& coeff, const Rational& exponent);

  ExpPoly operator+(const ExpPoly& o) const;
  ExpPoly operator*(const ExpPoly& o) const;
  ExpPoly scaled(const Rational& s) const;

  double evaluate() const;
  bool is_zero() const { return terms_.empty(); }
  /// Exact sign when every term has coefficients of one sign; otherwise by evaluation.
  int sign() const;
  std::string str() const;
  const std::vector<std::pair<Rational, Rational>>& terms() const { return terms_; }  // (exponent, coeff)

  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Rational& exponent, const Rational& coeff);
  std::vector<std::pair<Rational, Rational>> terms_;  // sorted by exponent
};

/// Closed form of exp(-ad_u) for aff(R): [[1, 0], [L, e^{-alpha}]] with
/// L = beta (1 - e^{-alpha}) / alpha, L = beta when alpha = 0.
struct AffRExpNegAd {
  ExpPoly top_left, top_right, bottom_left, bottom_right;
  RealMatrix evaluate() const;
};

AffRExpNegAd exp_neg_ad_affr(const Rational& alpha, const Rational& beta);
/// Numeric closed form for real alpha, beta.
RealMatrix exp_neg_ad_affr(double alpha, double beta);

struct ExpNegAd {
  bool closed_form = false;
  AffRExpNegAd affr;    // set when closed_form
  ScalarMatrix series;  // set otherwise
  RealMatrix numeric;   // always set
};

/// Closed form for aff(R), truncated exact series (terms >= 1) for any other algebra.
ExpNegAd exp_neg_ad(const AlgElement& u, int terms);

/// Exact check of the Jacobi identity on all basis triples.
bool jacobi_check(const LieAlgebraSpec& alg);

}  // namespace orbitkit
