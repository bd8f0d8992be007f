#pragma once

#include <complex>
#include <string>
#include <vector>

#include "orbitkit/liealg.hpp"
#include "orbitkit/symbol.hpp"

namespace orbitkit {

/// F = lambda X* + mu Y* in aff(R)*, with exact exponential-polynomial coordinates.
struct CoadjointPoint {
  ExpPoly lambda;
  ExpPoly mu;
};

/// Chart point (z, w) on sheet k of the aff(C) orbit: 2k pi < Im w < 2k pi + 2 pi.
struct AffCChartPoint {
  std::complex<double> z;
  std::complex<double> w;
  long sheet = 0;
};

/// Throws InvalidInput when Im w is outside the sheet's strip.
void validate_sheet(const AffCChartPoint& pt);

struct OrbitClass {
  enum class Tag { Point, UpperHalfPlane, LowerHalfPlane, AffCOpen, AffCPoint };
  Tag tag = Tag::Point;
  ExpPoly point_lambda;  // Point only
  long sheet = 0;        // AffCOpen only

  std::string name() const;
  friend bool operator==(const OrbitClass& a, const OrbitClass& b) {
    return a.tag == b.tag && a.point_lambda == b.point_lambda && a.sheet == b.sheet;
  }
};

/// K(exp u) F = (lambda + mu L) X* + (mu e^{-alpha}) Y* for u = alpha X + beta Y
/// with rational alpha, beta.
CoadjointPoint coadjoint_apply(const AlgElement& u, const CoadjointPoint& f);
/// Floating-point version: returns (lambda', mu').
std::pair<double, double> coadjoint_apply(double alpha, double beta, double lambda, double mu);

OrbitClass classify_orbit(const CoadjointPoint& f);
/// aff(C)*: point orbit iff both Y-components vanish, else the open orbit (charted on sheet k).
OrbitClass classify_orbit_affc(const std::vector<Rational>& dual_coords, long sheet = 0);

/// alpha p + beta e^q on the aff(R) chart.
Symbol hamiltonian_affR(const AlgElement& z);
/// (1/2)(alpha z + beta e^w + conj(alpha) zb + conj(beta) e^{wb}) with
/// alpha = a1 + i a2, beta = b1 + i b2.
Symbol hamiltonian_affC(const AlgElement& a, long sheet = 0);
/// Dispatches on the element's algebra.
Symbol hamiltonian(const AlgElement& z);

/// aff(R): f_p g_q - f_q g_p. aff(C): 2 [f_z g_w - f_w g_z + f_zb g_wb - f_wb g_zb].
Symbol poisson_bracket(const Symbol& f, const Symbol& g);

/// Checks that the Poisson brackets of the chart coordinates reproduce the
/// standard form (dp^dq for aff(R), dp1^dq1 - dp2^dq2 for aff(C)).
/// Throws Precondition on a zero-dimensional orbit.
bool kirillov_form_check(const OrbitClass& orbit);

struct PairCheck {
  std::string lhs, rhs;
  bool pass = false;
  std::string value;     // computed left-hand side
  std::string expected;  // right-hand side
  std::string residual;  // value - expected, "0" on pass
};

/// {A~, B~} = [A,B]~ over all ordered basis pairs.
std::vector<PairCheck> poisson_homomorphism_check(const LieAlgebraPtr& alg);

}  // namespace orbitkit
