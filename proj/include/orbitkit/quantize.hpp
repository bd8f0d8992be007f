#pragma once

#include <vector>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/liealg.hpp"
#include "orbitkit/operator_expr.hpp"
#include "orbitkit/starprod.hpp"

namespace orbitkit {

/// u -> (i Z~) * u, left star multiplication.
struct StarMultiplier {
  Symbol symbol;  // i Z~
  Symbol operator()(const Symbol& u) const { return star(symbol, u); }
};

StarMultiplier ell(const AlgElement& z);

/// l_{[A,B]} u = l_A l_B u - l_B l_A u for every ordered basis pair and every test symbol.
std::vector<PairCheck> ell_homomorphism_check(const LieAlgebraPtr& alg, const std::vector<Symbol>& test_symbols);

enum class LhatMutation { None, DropHalf };

/// alpha (1/2 d_q - d_x) + i beta e^{q - x/2} on the (x, q) chart.
/// DropHalf replaces 1/2 d_q by d_q.
OperatorExpr lhat_affR(const AlgElement& z, LhatMutation mutation = LhatMutation::None);
/// alpha d_u + conj(alpha) d_ub + (i/2)(beta e^u + conj(beta) e^ub) on the (u, ub) chart.
OperatorExpr lhat_affC(const AlgElement& a, long sheet = 0);
OperatorExpr lhat(const AlgElement& z, LhatMutation mutation = LhatMutation::None);

/// [lhat_Z, lhat_T] = lhat_{[Z,T]} for every ordered basis pair.
/// DropHalf is only defined for affR.
std::vector<PairCheck> lhat_homomorphism_check(const LieAlgebraPtr& alg, LhatMutation mutation = LhatMutation::None);

/// lhat_affR(z) rewritten in s = q - x/2, r = q + x/2.
OperatorExpr lhat_affR_in_sr(const AlgElement& z);
/// Checks the rewrite equals alpha d_s + i beta e^s.
bool lhat_rewrite_check(const AlgElement& z);

}  // namespace orbitkit
