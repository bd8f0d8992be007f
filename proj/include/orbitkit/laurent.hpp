#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitkit/scalar.hpp"

namespace orbitkit {

/// Laurent polynomial in t: exponent -> coefficient (no zero coefficients).
class Laurent {
 public:
  Laurent() = default;
  Laurent(const ScalarQ& c, int exponent = 0);  // NOLINT(google-explicit-constructor)

  const std::map<int, ScalarQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ScalarQ coeff(int exponent) const;
  /// True iff the polynomial is c t^k with c != 0.
  bool is_monomial() const { return terms_.size() == 1; }

  Laurent derivative() const;
  Laurent shifted(int k) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const ScalarQ& s);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  std::map<int, ScalarQ> terms_;
};

using LaurentMatrix = std::vector<std::vector<Laurent>>;

/// Determinant by expansion over column subsets.
Laurent determinant(const LaurentMatrix& g);
/// Transposed cofactor matrix: adj(g) g = det(g) I.
LaurentMatrix adjugate(const LaurentMatrix& g);
LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix identity_matrix(std::size_t n);

/// Residue at t = 0 of tr(g^{-1} g'). Throws Precondition unless det g = c t^k.
long chern1_winding(const LaurentMatrix& g);

}  // namespace orbitkit
