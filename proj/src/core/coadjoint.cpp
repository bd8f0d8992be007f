#include "orbitkit/coadjoint.hpp"

#include <cmath>
#include <numbers>

#include "orbitkit/errors.hpp"

namespace orbitkit {

void validate_sheet(const AffCChartPoint& pt) {
  double lo = 2.0 * std::numbers::pi * static_cast<double>(pt.sheet);
  double im = pt.w.imag();
  if (!(im > lo && im < lo + 2.0 * std::numbers::pi))
    fail(ErrorKind::InvalidInput, "Im w = " + std::to_string(im) + " is outside sheet " + std::to_string(pt.sheet));
}

std::string OrbitClass::name() const {
  switch (tag) {
    case Tag::Point: return "point";
    case Tag::UpperHalfPlane: return "upper-half-plane";
    case Tag::LowerHalfPlane: return "lower-half-plane";
    case Tag::AffCOpen: return "affC-open";
    case Tag::AffCPoint: return "affC-point";
  }
  return "unknown";
}

namespace {

void require_affr(const AlgElement& u) {
  if (!(*u.algebra() == *aff_r())) fail(ErrorKind::Mismatch, "expected an element of affR, got " + u.algebra()->name());
}

void require_real(const AlgElement& u) {
  for (const auto& c : u.coords())
    if (!c.is_real()) fail(ErrorKind::Precondition, "coordinates must be real");
}

}  // namespace

CoadjointPoint coadjoint_apply(const AlgElement& u, const CoadjointPoint& f) {
  require_affr(u);
  require_real(u);
  auto m = exp_neg_ad_affr(u[0].re(), u[1].re());
  // Row vector (lambda, mu) times exp(-ad_u).
  return {f.lambda * m.top_left + f.mu * m.bottom_left, f.lambda * m.top_right + f.mu * m.bottom_right};
}

std::pair<double, double> coadjoint_apply(double alpha, double beta, double lambda, double mu) {
  auto m = exp_neg_ad_affr(alpha, beta);
  return {lambda * m[0][0] + mu * m[1][0], lambda * m[0][1] + mu * m[1][1]};
}

OrbitClass classify_orbit(const CoadjointPoint& f) {
  OrbitClass c;
  int s = f.mu.sign();
  if (s > 0) {
    c.tag = OrbitClass::Tag::UpperHalfPlane;
  } else if (s < 0) {
    c.tag = OrbitClass::Tag::LowerHalfPlane;
  } else {
    c.tag = OrbitClass::Tag::Point;
    c.point_lambda = f.lambda;
  }
  return c;
}

OrbitClass classify_orbit_affc(const std::vector<Rational>& dual_coords, long sheet) {
  if (dual_coords.size() != 4) fail(ErrorKind::InvalidInput, "affC dual point needs 4 coordinates");
  OrbitClass c;
  if (sgn(dual_coords[2]) == 0 && sgn(dual_coords[3]) == 0) {
    c.tag = OrbitClass::Tag::AffCPoint;
  } else {
    c.tag = OrbitClass::Tag::AffCOpen;
    c.sheet = sheet;
  }
  return c;
}

Symbol hamiltonian_affR(const AlgElement& z) {
  require_affr(z);
  auto ch = chart_affr();
  return Symbol::variable(ch, "p") * z[0] + Symbol::exponential(ch, "q", Rational(1), z[1]);
}

Symbol hamiltonian_affC(const AlgElement& a, long /*sheet*/) {
  if (!(*a.algebra() == *aff_c())) fail(ErrorKind::Mismatch, "expected an element of affC, got " + a.algebra()->name());
  require_real(a);
  auto ch = chart_affc();
  ScalarQ alpha(a[0].re(), a[1].re());
  ScalarQ beta(a[2].re(), a[3].re());
  ScalarQ half = ScalarQ::fraction(1, 2);
  Symbol s = Symbol::variable(ch, "z") * (alpha * half) + Symbol::variable(ch, "zb") * (alpha.conj() * half);
  s += Symbol::exponential(ch, "w", Rational(1), beta * half);
  s += Symbol::exponential(ch, "wb", Rational(1), beta.conj() * half);
  return s;
}

Symbol hamiltonian(const AlgElement& z) {
  if (*z.algebra() == *aff_r()) return hamiltonian_affR(z);
  if (*z.algebra() == *aff_c()) return hamiltonian_affC(z);
  fail(ErrorKind::InvalidInput, "no Hamiltonian chart for algebra " + z.algebra()->name());
}

Symbol poisson_bracket(const Symbol& f, const Symbol& g) {
  if (!same_chart(f.chart(), g.chart())) fail(ErrorKind::Mismatch, "Poisson bracket of symbols in different charts");
  const auto& name = f.chart()->name;
  if (name == "affR") return f.derivative("p") * g.derivative("q") - f.derivative("q") * g.derivative("p");
  if (name == "affC") {
    Symbol s = f.derivative("z") * g.derivative("w") - f.derivative("w") * g.derivative("z") +
               f.derivative("zb") * g.derivative("wb") - f.derivative("wb") * g.derivative("zb");
    return s * ScalarQ(2);
  }
  fail(ErrorKind::InvalidInput, "no Poisson structure on chart " + name);
}

bool kirillov_form_check(const OrbitClass& orbit) {
  using Tag = OrbitClass::Tag;
  if (orbit.tag == Tag::Point || orbit.tag == Tag::AffCPoint)
    fail(ErrorKind::Precondition, "zero-dimensional orbit carries no Kirillov form");
  if (orbit.tag == Tag::UpperHalfPlane || orbit.tag == Tag::LowerHalfPlane) {
    auto ch = chart_affr();
    Symbol p = Symbol::variable(ch, "p"), q = Symbol::variable(ch, "q");
    return poisson_bracket(p, q) == Symbol::constant(ch, 1) && poisson_bracket(q, p) == Symbol::constant(ch, -1) &&
           poisson_bracket(p, p).is_zero() && poisson_bracket(q, q).is_zero();
  }
  // Real Darboux coordinates written in the Wirtinger chart:
  // p1 = (z+zb)/2, p2 = (z-zb)/(2i), q1 = (w+wb)/2, q2 = (w-wb)/(2i).
  auto ch = chart_affc();
  Symbol z = Symbol::variable(ch, "z"), zb = Symbol::variable(ch, "zb");
  Symbol w = Symbol::variable(ch, "w"), wb = Symbol::variable(ch, "wb");
  ScalarQ half = ScalarQ::fraction(1, 2);
  ScalarQ inv2i = (ScalarQ(2) * ScalarQ::i()).inverse();
  std::vector<Symbol> coords = {(z + zb) * half, (w + wb) * half, (z - zb) * inv2i, (w - wb) * inv2i};  // p1 q1 p2 q2
  // omega = dp1^dq1 - dp2^dq2
  const long expected[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!(poisson_bracket(coords[static_cast<std::size_t>(i)], coords[static_cast<std::size_t>(j)]) == Symbol::constant(ch, expected[i][j])))
        return false;
  return true;
}

std::vector<PairCheck> poisson_homomorphism_check(const LieAlgebraPtr& alg) {
  std::vector<PairCheck> out;
  for (int i = 0; i < alg->dim(); ++i) {
    for (int j = 0; j < alg->dim(); ++j) {
      auto a = AlgElement::basis(alg, i), b = AlgElement::basis(alg, j);
      Symbol value = poisson_bracket(hamiltonian(a), hamiltonian(b));
      Symbol expected = hamiltonian(bracket(a, b));
      Symbol res = value - expected;
      out.push_back({alg->basis()[static_cast<std::size_t>(i)], alg->basis()[static_cast<std::size_t>(j)], res.is_zero(),
                     value.str(), expected.str(), res.str()});
    }
  }
  return out;
}

}  // namespace orbitkit
