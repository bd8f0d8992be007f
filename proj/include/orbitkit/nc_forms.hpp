#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitkit/scalar.hpp"

namespace orbitkit {

/// Finite-dimensional unital algebra by structure constants:
/// e_i e_j = sum_k mult[i][j][k] e_k.
struct FDAlgebra {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<std::vector<ScalarQ>>> mult;
  std::vector<ScalarQ> unit;

  int dim() const { return static_cast<int>(labels.size()); }
  std::vector<ScalarQ> multiply(const std::vector<ScalarQ>& a, const std::vector<ScalarQ>& b) const;
  /// Associativity on all basis triples and both unit laws (exact).
  bool is_associative() const;
  bool unit_laws_hold() const;
};

FDAlgebra algebra_c();
FDAlgebra algebra_c2();
FDAlgebra algebra_m2();
/// "c", "c2", "m2".
FDAlgebra builtin_fd_algebra(const std::string& name);

/// Word a0 da1 ... dan in the adapted basis: a0 indexes all of A (0 is the
/// unit), a1..an index the complement of the unit (values >= 1).
using Word = std::vector<int>;
using NCForm = std::map<Word, ScalarQ>;

int form_degree(const Word& w);
void form_add(NCForm& acc, const NCForm& f, const ScalarQ& scale = ScalarQ(1));
NCForm form_scaled(const NCForm& f, const ScalarQ& s);
NCForm form_component(const NCForm& f, int degree);
/// Drops every component of degree > max_degree.
NCForm form_truncate(const NCForm& f, int max_degree);
int form_max_degree(const NCForm& f);  // -1 for zero

/// Noncommutative differential forms Omega^{<=cap} A over an adapted basis
/// b_0 = 1, b_1..b_{m-1} of A.
class FormSpace {
 public:
  FormSpace(FDAlgebra alg, int cap);

  const FDAlgebra& algebra() const { return alg_; }
  int cap() const { return cap_; }
  int m() const { return m_; }
  /// dim Omega^k = m (m-1)^k.
  long dimension(int degree) const;

  /// Adapted coordinates of an element given in the algebra's own basis, and back.
  std::vector<ScalarQ> to_adapted(const std::vector<ScalarQ>& v) const;
  std::vector<ScalarQ> from_adapted(const std::vector<ScalarQ>& v) const;
  std::string adapted_label(int k) const;

  /// Degree-0 form of an algebra element (own basis).
  NCForm element(const std::vector<ScalarQ>& v) const;
  /// Degree-0 component back in the algebra's own basis.
  std::vector<ScalarQ> degree0(const NCForm& f) const;

  NCForm d(const NCForm& f) const;
  NCForm b(const NCForm& f) const;
  /// kappa(w da) = (-1)^{|w|} da w (degree preserving).
  NCForm kappa(const NCForm& f) const;
  NCForm kappa_power(const NCForm& f, int j) const;
  /// B = sum_{j=0}^{n} kappa^j d on Omega^n.
  NCForm connes_B(const NCForm& f) const;
  /// Ordinary product of forms (Leibniz rule), truncated at cap.
  NCForm product(const NCForm& x, const NCForm& y) const;
  /// x o y = xy - (-1)^{|x|} dx dy, truncated at cap.
  NCForm fedosov(const NCForm& x, const NCForm& y) const;

  /// Enumerates the basis words of Omega^degree.
  std::vector<Word> basis(int degree) const;
  /// Position of a word inside the basis of its degree.
  long word_index(const Word& w) const;

  std::string str(const NCForm& f) const;

 private:
  void check_degree(int degree, const char* op) const;
  // Product of adapted basis elements i, j as adapted coordinates.
  const std::vector<ScalarQ>& mul(int i, int j) const { return table_[static_cast<std::size_t>(i * m_ + j)]; }
  // Word times a basis element a (right multiplication in Omega A).
  void right_mult(const Word& w, int a, const ScalarQ& c, NCForm& out) const;
  // da times a word (left multiplication).
  void left_mult_d(int a, const Word& w, const ScalarQ& c, NCForm& out) const;

  FDAlgebra alg_;
  int cap_;
  int m_;
  std::vector<std::vector<ScalarQ>> to_adapted_;    // change of basis rows
  std::vector<std::vector<ScalarQ>> from_adapted_;  // columns are adapted vectors
  std::vector<std::vector<ScalarQ>> table_;
  std::vector<std::string> labels_adapted_;
};

}  // namespace orbitkit
