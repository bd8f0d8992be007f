#pragma once

#include <vector>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/liealg.hpp"
#include "orbitkit/symbol.hpp"

namespace orbitkit {

enum class StarMode {
  MoyalHalfI,  // weight (1/r!) (1/(2i))^r on P^r built from the chart's Lambda
  WeylH,       // weight (1/r!) (i h/2)^r on Pi^r, Pi = sum (d_xi (x) d_x - d_x (x) d_xi)
};

struct StarConvention {
  StarMode mode = StarMode::MoyalHalfI;
  Rational h{1};
};

/// One summand c * (d^{du} u) (d^{dv} v) of an order-r bidifferential operator.
struct BidiffTerm {
  Rational coeff;
  std::vector<int> du, dv;
};

/// Expansion of the order-r operator for a constant tensor into derivative
/// multi-indices, one entry per composition of r over the nonzero entries.
std::vector<BidiffTerm> bidifferential_terms(int r, const std::vector<std::vector<Rational>>& lambda);

/// Bidifferential operator of order r for an arbitrary constant tensor:
/// sum Lambda^{i1 j1}...Lambda^{ir jr} d_{i1..ir} u d_{j1..jr} v.
Symbol bidifferential(const Symbol& u, const Symbol& v, int r, const std::vector<std::vector<Rational>>& lambda);

/// P^r(u, v) with the chart's Lambda. Requires r >= 1.
Symbol pr(const Symbol& u, const Symbol& v, int r);

/// Tensor of the Weyl convention: Pi^{xi x} = 1, Pi^{x xi} = -1 for each
/// (position x, conjugate xi) pair of the chart.
std::vector<std::vector<Rational>> weyl_tensor(const Chart& chart);

/// Largest order r with a possibly nonzero P^r(u, v). Throws NonTerminating
/// when some pair of terms has an unbounded series.
int star_order_bound(const Symbol& u, const Symbol& v);

/// Exact finite product; throws NonTerminating if the series does not end.
Symbol star(const Symbol& u, const Symbol& v, const StarConvention& conv = {});

/// Per-order terms T_r = P^r(u, v) / r!, so that the Moyal product is
/// sum_r (1/(2i))^r T_r. Entry 0 is the pointwise product.
std::vector<Symbol> star_formal(const Symbol& u, const Symbol& v);

/// i Z~ * i T~ - i T~ * i Z~ = i [Z,T]~ for all ordered basis pairs. The
/// Hamiltonians are moved onto `chart` (e.g. a sign-flipped Lambda).
std::vector<PairCheck> star_commutator_check(const LieAlgebraPtr& alg, const ChartPtr& chart);

}  // namespace orbitkit
