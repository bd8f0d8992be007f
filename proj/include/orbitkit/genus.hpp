#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitkit/scalar.hpp"

namespace orbitkit {

/// Polynomial in graded generators: exponent vector -> rational coefficient.
using ClassPoly = std::map<std::vector<int>, Rational>;

/// Graded polynomial in named generators with weights, truncated at `cap`.
struct GradedClassSeries {
  std::vector<std::string> generators;
  std::vector<int> weights;
  int cap = 0;
  ClassPoly poly;

  int degree_of(const std::vector<int>& exps) const;
  /// Homogeneous component of the given degree.
  ClassPoly component(int degree) const;
  std::string component_str(int degree) const;
  std::string str() const;
};

/// Power series in one variable, coefficient k of x^k.
using PowerSeries = std::vector<Rational>;

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b, int cap);
/// log of a series with constant term 1.
PowerSeries series_log(const PowerSeries& a, int cap);
/// exp of a series with constant term 0.
PowerSeries series_exp(const PowerSeries& a, int cap);

/// x / (1 - e^{-x}).
PowerSeries todd_q(int cap);
/// (x/2) / sinh(x/2) in x.
PowerSeries ahat_q_root(int cap);
/// (sqrt(y)/2) / sinh(sqrt(y)/2) in y = x^2.
PowerSeries ahat_q_pontryagin(int cap);

/// Multiplicative sequence of Q: prod_i Q(x_i) written in the elementary
/// symmetric functions e_1..e_n of the x_i (generator k has weight k).
GradedClassSeries multiplicative_sequence(const PowerSeries& q, int n, const std::string& prefix);

/// Todd class to degree n in c_1..c_n.
GradedClassSeries todd_series(int n);
/// A-hat class to degree n in p_1..p_n.
GradedClassSeries ahat_series(int n);

/// prod_i (x_i/2)/sinh(x_i/2) * e^{theta sum x_i} = prod_i x_i/(1 - e^{-x_i}) with n roots, to degree n.
bool ahat_twist_equals_todd(int n, const Rational& theta = Rational(1, 2));

/// Sum_i e^{x_i} over `rank` roots to degree n, written in c_1..c_rank.
GradedClassSeries chern_character(int rank, int n);

/// Substitutes concrete roots: c_k -> e_k(roots); returns the value of each degree 0..cap.
std::vector<Rational> evaluate_at_roots(const GradedClassSeries& s, const std::vector<Rational>& roots);

/// Polynomial helpers on ClassPoly with weights, truncating above `cap`.
ClassPoly poly_mul(const ClassPoly& a, const ClassPoly& b, const std::vector<int>& weights, int cap);
ClassPoly poly_add(const ClassPoly& a, const ClassPoly& b);
ClassPoly poly_scale(const ClassPoly& a, const Rational& s);

/// Stiefel-Whitney total classes over Z/2 in generators w_1..w_k: graded product, truncated at cap.
ClassPoly sw_total_product(const ClassPoly& a, const ClassPoly& b, const std::vector<int>& weights, int cap);
/// Reduces coefficients mod 2 (integers required).
ClassPoly mod2(const ClassPoly& a);

}  // namespace orbitkit
