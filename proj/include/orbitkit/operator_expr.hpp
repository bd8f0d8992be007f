#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitkit/symbol.hpp"

namespace orbitkit {

/// Differential operator sum_a c_a(vars) d^a with Symbol coefficients.
class OperatorExpr {
 public:
  explicit OperatorExpr(ChartPtr chart);
  static OperatorExpr multiplication(const Symbol& s);
  /// c * d^orders
  static OperatorExpr derivative(ChartPtr chart, std::vector<int> orders, const ScalarQ& c = 1);
  static OperatorExpr derivative(ChartPtr chart, const std::string& var, const ScalarQ& c = 1);

  const ChartPtr& chart() const { return chart_; }
  const std::map<std::vector<int>, Symbol>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  void add_term(const std::vector<int>& orders, const Symbol& coeff);

  OperatorExpr operator+(const OperatorExpr& o) const;
  OperatorExpr operator-(const OperatorExpr& o) const;
  OperatorExpr operator*(const ScalarQ& s) const;

  Symbol apply(const Symbol& f) const;
  std::string str() const;

  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b);

 private:
  void require_chart(const ChartPtr& c) const;
  ChartPtr chart_;
  std::map<std::vector<int>, Symbol> terms_;
};

/// a o b by the multi-index Leibniz rule.
OperatorExpr op_compose(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr op_commutator(const OperatorExpr& a, const OperatorExpr& b);

/// Change of variables: coefficients via old_i = sum_j coeff_map[i][j] new_j,
/// derivatives via d_{old_i} = sum_j deriv_map[i][j] d_{new_j}.
OperatorExpr op_linear_change(const OperatorExpr& op, const ChartPtr& target,
                              const std::vector<std::vector<Rational>>& coeff_map,
                              const std::vector<std::vector<Rational>>& deriv_map);

}  // namespace orbitkit
