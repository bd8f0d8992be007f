#include "orbitkit/quantize.hpp"

#include "orbitkit/errors.hpp"

namespace orbitkit {

StarMultiplier ell(const AlgElement& z) { return {hamiltonian(z) * ScalarQ::i()}; }

std::vector<PairCheck> ell_homomorphism_check(const LieAlgebraPtr& alg, const std::vector<Symbol>& test_symbols) {
  std::vector<PairCheck> out;
  for (int a = 0; a < alg->dim(); ++a) {
    for (int b = 0; b < alg->dim(); ++b) {
      auto za = AlgElement::basis(alg, a), zb = AlgElement::basis(alg, b);
      auto la = ell(za), lb = ell(zb), lab = ell(bracket(za, zb));
      PairCheck pc{alg->basis()[static_cast<std::size_t>(a)], alg->basis()[static_cast<std::size_t>(b)], true, "", "", "0"};
      for (const auto& u : test_symbols) {
        Symbol value = la(lb(u)) - lb(la(u));
        Symbol expected = lab(u);
        Symbol res = value - expected;
        if (!res.is_zero()) {
          pc.pass = false;
          pc.value = value.str();
          pc.expected = expected.str();
          pc.residual = res.str();
          break;
        }
      }
      out.push_back(std::move(pc));
    }
  }
  return out;
}

namespace {

void require_real(const AlgElement& u) {
  for (const auto& c : u.coords())
    if (!c.is_real()) fail(ErrorKind::Precondition, "coordinates must be real");
}

}  // namespace

OperatorExpr lhat_affR(const AlgElement& z, LhatMutation mutation) {
  if (!(*z.algebra() == *aff_r())) fail(ErrorKind::Mismatch, "lhat_affR needs an element of affR");
  auto ch = chart_xq();
  ScalarQ half = mutation == LhatMutation::DropHalf ? ScalarQ(1) : ScalarQ::fraction(1, 2);
  OperatorExpr op = OperatorExpr::derivative(ch, "q", z[0] * half) - OperatorExpr::derivative(ch, "x", z[0]);
  Monomial m{{0, 0}, {Rational(-1, 2), Rational(1)}};  // e^{q - x/2}
  return op + OperatorExpr::multiplication(Symbol::monomial(ch, m, z[1] * ScalarQ::i()));
}

OperatorExpr lhat_affC(const AlgElement& a, long /*sheet*/) {
  if (!(*a.algebra() == *aff_c())) fail(ErrorKind::Mismatch, "lhat_affC needs an element of affC");
  require_real(a);
  auto ch = chart_uub();
  ScalarQ alpha(a[0].re(), a[1].re());
  ScalarQ beta(a[2].re(), a[3].re());
  ScalarQ i_half(Rational(0), Rational(1, 2));
  OperatorExpr op = OperatorExpr::derivative(ch, "u", alpha) + OperatorExpr::derivative(ch, "ub", alpha.conj());
  Symbol mult = Symbol::exponential(ch, "u", Rational(1), beta * i_half) + Symbol::exponential(ch, "ub", Rational(1), beta.conj() * i_half);
  return op + OperatorExpr::multiplication(mult);
}

OperatorExpr lhat(const AlgElement& z, LhatMutation mutation) {
  if (*z.algebra() == *aff_r()) return lhat_affR(z, mutation);
  if (*z.algebra() == *aff_c()) {
    if (mutation != LhatMutation::None) fail(ErrorKind::InvalidInput, "the drop-half mutation is defined for affR only");
    return lhat_affC(z);
  }
  fail(ErrorKind::InvalidInput, "no quantized operator for algebra " + z.algebra()->name());
}

std::vector<PairCheck> lhat_homomorphism_check(const LieAlgebraPtr& alg, LhatMutation mutation) {
  std::vector<PairCheck> out;
  for (int a = 0; a < alg->dim(); ++a) {
    for (int b = 0; b < alg->dim(); ++b) {
      auto za = AlgElement::basis(alg, a), zb = AlgElement::basis(alg, b);
      OperatorExpr value = op_commutator(lhat(za, mutation), lhat(zb, mutation));
      OperatorExpr expected = lhat(bracket(za, zb), mutation);
      OperatorExpr res = value - expected;
      out.push_back({alg->basis()[static_cast<std::size_t>(a)], alg->basis()[static_cast<std::size_t>(b)], res.is_zero(),
                     value.str(), expected.str(), res.str()});
    }
  }
  return out;
}

OperatorExpr lhat_affR_in_sr(const AlgElement& z) {
  // x = r - s, q = (s + r)/2;  d_x = (-d_s + d_r)/2, d_q = d_s + d_r.
  std::vector<std::vector<Rational>> coeff_map = {{Rational(-1), Rational(1)}, {Rational(1, 2), Rational(1, 2)}};
  std::vector<std::vector<Rational>> deriv_map = {{Rational(-1, 2), Rational(1, 2)}, {Rational(1), Rational(1)}};
  return op_linear_change(lhat_affR(z), chart_sr(), coeff_map, deriv_map);
}

bool lhat_rewrite_check(const AlgElement& z) {
  auto ch = chart_sr();
  OperatorExpr expected = OperatorExpr::derivative(ch, "s", z[0]) +
                          OperatorExpr::multiplication(Symbol::exponential(ch, "s", Rational(1), z[1] * ScalarQ::i()));
  return lhat_affR_in_sr(z) == expected;
}

}  // namespace orbitkit
