#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitkit/exact_linalg.hpp"
#include "orbitkit/nc_forms.hpp"

namespace orbitkit {

/// How many kappa^2 powers N_{kappa^2} sums when applied to b(w), w of degree 2k:
/// HalfDegree sums j < k, FormDegree sums j < 2k - 1 (degree of b(w)).
enum class NBinding { HalfDegree, FormDegree };

/// delta = B - N_{kappa^2} b on even forms.
NCForm x_delta(const FormSpace& s, const NCForm& even, NBinding binding = NBinding::HalfDegree);
/// beta = b - (1 + kappa) d on odd forms; components above the space cap are dropped.
NCForm x_beta(const FormSpace& s, const NCForm& odd);

struct XHomology {
  int adic = 0, cap = 0;
  long even_dim = 0, odd_dim = 0;  // before the quotient by b(Omega^{2n+2})
  int rank_w = 0, rank_delta = 0, rank_beta = 0;
  long h0 = 0, h1 = 0;
  bool beta_delta_zero = false;
  bool delta_beta_zero = false;
};

/// Truncated X-complex: even part Omega^0 + ... + Omega^{2n}, odd part
/// Omega^1 + ... + Omega^{2n+1} modulo b(Omega^{2n+2}), differentials delta and beta.
class XComplex {
 public:
  XComplex(FDAlgebra alg, int adic, int cap, NBinding binding = NBinding::HalfDegree);

  const FormSpace& space() const { return space_; }
  int adic() const { return n_; }

  const XHomology& homology() const { return result_; }

  SparseVec<ScalarQ> even_vector(const NCForm& f) const;
  SparseVec<ScalarQ> odd_vector(const NCForm& f) const;
  NCForm even_form(const SparseVec<ScalarQ>& v) const;

  /// Canonical representative of an even form modulo im(beta).
  NCForm reduce_even(const NCForm& f) const;
  bool is_boundary(const NCForm& even) const;
  /// delta(f) lies in b(Omega^{2n+2}).
  bool is_cycle(const NCForm& even) const;

 private:
  FormSpace space_;
  int n_;
  NBinding binding_;
  std::vector<std::vector<Word>> even_basis_, odd_basis_;
  std::vector<long> even_offset_, odd_offset_;  // indexed by degree
  long even_dim_ = 0, odd_dim_ = 0;
  Echelon<ScalarQ> w_span_;
  Echelon<ScalarQ> beta_image_;
  XHomology result_;
};

/// Matrix with form entries.
using FormMatrix = std::vector<std::vector<NCForm>>;

FormMatrix fedosov_matrix(const FormSpace& s, const FormMatrix& x, const FormMatrix& y);

struct LiftResult {
  FormMatrix lift;
  bool idempotent = false;  // lift o lift == lift modulo IA^{n+1}
};

/// e: k x k matrix over A (entries in the algebra's own basis), idempotent.
/// x is the degree-0 lift unless `initial` is given (any lift of e modulo IA).
LiftResult lift_idempotent(const FDAlgebra& alg, const std::vector<std::vector<std::vector<ScalarQ>>>& e, int adic,
                           const std::optional<FormMatrix>& initial = std::nullopt);

struct Chern0Result {
  NCForm trace;
  NCForm reduced;                 // canonical representative modulo im(beta)
  std::vector<ScalarQ> degree0;   // degree-0 part of `reduced`, own basis
  bool cycle = false;
  std::string text;
};

Chern0Result chern0(const XComplex& x, const std::vector<std::vector<std::vector<ScalarQ>>>& e,
                    const std::optional<FormMatrix>& initial = std::nullopt);

}  // namespace orbitkit
