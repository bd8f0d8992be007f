#include <doctest.h>

#include <cmath>
#include <random>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/errors.hpp"

using namespace orbitkit;

namespace {

CoadjointPoint point(long l, long m) { return {ExpPoly(Rational(l)), ExpPoly(Rational(m))}; }

Symbol random_symbol(const ChartPtr& chart, std::mt19937& rng) {
  std::uniform_int_distribution<int> pw(0, 2), co(-3, 3), ew(-2, 2);
  Symbol s(chart);
  for (int t = 0; t < 3; ++t) {
    Monomial m{std::vector<int>(chart->dim(), 0), std::vector<Rational>(chart->dim())};
    for (int k = 0; k < chart->dim(); ++k) {
      if (chart->position[k])
        m.pow[k] = pw(rng);
      else
        m.expw[k] = Rational(ew(rng), 2);
    }
    s.add_term(m, ScalarQ(Rational(co(rng)), Rational(co(rng))));
  }
  return s;
}

// f_p g_q - f_q g_p, written out on the affR chart
Symbol pb_oracle_affr(const Symbol& f, const Symbol& g) {
  return f.derivative("p") * g.derivative("q") - f.derivative("q") * g.derivative("p");
}

}  // namespace

TEST_CASE("orbit classification examples") {
  auto p3 = classify_orbit(point(3, 0));
  CHECK(p3.tag == OrbitClass::Tag::Point);
  CHECK(p3.point_lambda == ExpPoly(Rational(3)));
  CHECK(classify_orbit(point(0, 1)).tag == OrbitClass::Tag::UpperHalfPlane);
  CHECK(classify_orbit(point(0, -2)).tag == OrbitClass::Tag::LowerHalfPlane);
  CHECK(classify_orbit(point(0, 1)).name() == "upper-half-plane");
}

TEST_CASE("classification on the 9x9 grid of halves") {
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) {
      CoadjointPoint f{ExpPoly(Rational(i, 2)), ExpPoly(Rational(j, 2))};
      auto c = classify_orbit(f);
      if (j > 0) CHECK(c.tag == OrbitClass::Tag::UpperHalfPlane);
      if (j < 0) CHECK(c.tag == OrbitClass::Tag::LowerHalfPlane);
      if (j == 0) {
        CHECK(c.tag == OrbitClass::Tag::Point);
        CHECK(c.point_lambda == ExpPoly(Rational(i, 2)));
      }
    }
}

TEST_CASE("coadjoint action") {
  auto r = aff_r();
  auto zero = AlgElement::zero(r);
  auto f = point(2, 5);
  auto g = coadjoint_apply(zero, f);
  CHECK(g.lambda == f.lambda);
  CHECK(g.mu == f.mu);
  // mu = 0 is fixed
  auto u = AlgElement(r, {ScalarQ(1), ScalarQ(3)});
  auto h = coadjoint_apply(u, point(7, 0));
  CHECK(h.lambda == ExpPoly(Rational(7)));
  CHECK(h.mu.is_zero());
  // generic point against L = b sum_{n>=1} (-a)^{n-1}/n!
  for (double a : {-1.5, 0.0, 0.5, 2.0})
    for (double b : {-1.0, 0.0, 2.0}) {
      double L = 0, term = 1;
      for (int n = 1; n < 40; ++n) {
        term = (n == 1) ? 1.0 : term * (-a) / n;
        L += b * term;
      }
      auto [l2, m2] = coadjoint_apply(a, b, 3.0, 2.0);
      CHECK(l2 == doctest::Approx(3.0 + 2.0 * L).epsilon(1e-12));
      CHECK(m2 == doctest::Approx(2.0 * std::exp(-a)).epsilon(1e-14));
    }
}

TEST_CASE("classification is invariant under the coadjoint action") {
  auto r = aff_r();
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int l = -1; l <= 1; ++l)
        for (int m = -2; m <= 2; ++m) {
          auto u = AlgElement(r, {ScalarQ(a), ScalarQ(b)});
          auto f = point(l, m);
          CHECK(classify_orbit(coadjoint_apply(u, f)) == classify_orbit(f));
        }
}

TEST_CASE("Hamiltonian functions") {
  auto r = aff_r();
  CHECK(hamiltonian_affR(AlgElement::basis(r, "X")) == Symbol::variable(chart_affr(), "p"));
  CHECK(hamiltonian_affR(AlgElement::basis(r, "Y")) == Symbol::exponential(chart_affr(), "q", Rational(1)));
  CHECK(hamiltonian_affR(AlgElement::zero(r)).is_zero());
  auto c = aff_c();
  auto ch = chart_affc();
  ScalarQ half(Rational(1, 2));
  CHECK(hamiltonian_affC(AlgElement::basis(c, "X1")) ==
        (Symbol::variable(ch, "z") + Symbol::variable(ch, "zb")) * half);
  CHECK(hamiltonian_affC(AlgElement::basis(c, "Y1")) ==
        (Symbol::exponential(ch, "w", Rational(1)) + Symbol::exponential(ch, "wb", Rational(1))) * half);
  CHECK(hamiltonian_affC(AlgElement::zero(c)).is_zero());
}

TEST_CASE("Poisson bracket examples") {
  auto ch = chart_affr();
  auto p = Symbol::variable(ch, "p"), q = Symbol::variable(ch, "q");
  CHECK(poisson_bracket(p, q) == Symbol::constant(ch, 1));
  CHECK(poisson_bracket(p, p).is_zero());
  auto c = aff_c();
  auto rez = hamiltonian_affC(AlgElement::basis(c, "X1"));
  auto ew = hamiltonian_affC(AlgElement::basis(c, "Y1"));
  CHECK(poisson_bracket(rez, ew) == ew);
  CHECK_THROWS_AS(poisson_bracket(p, rez), Error);
}

TEST_CASE("Poisson bracket: oracle, antisymmetry and Leibniz on random symbols") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto ch = chart_affr();
    auto f = random_symbol(ch, rng), g = random_symbol(ch, rng), h = random_symbol(ch, rng);
    CHECK(poisson_bracket(f, g) == pb_oracle_affr(f, g));
    CHECK(poisson_bracket(f, g) == -poisson_bracket(g, f));
    CHECK(poisson_bracket(f * g, h) == f * poisson_bracket(g, h) + poisson_bracket(f, h) * g);
    auto c4 = chart_affc();
    auto F = random_symbol(c4, rng), G = random_symbol(c4, rng), H = random_symbol(c4, rng);
    CHECK(poisson_bracket(F * G, H) == F * poisson_bracket(G, H) + poisson_bracket(F, H) * G);
    CHECK(poisson_bracket(F, F).is_zero());
  }
}

TEST_CASE("Poisson homomorphism on all basis pairs") {
  auto r = poisson_homomorphism_check(aff_r());
  CHECK(r.size() == 4);
  for (const auto& pc : r) CHECK_MESSAGE(pc.pass, pc.lhs << "," << pc.rhs << ": " << pc.residual);
  auto c = poisson_homomorphism_check(aff_c());
  CHECK(c.size() == 16);
  for (const auto& pc : c) CHECK_MESSAGE(pc.pass, pc.lhs << "," << pc.rhs << ": " << pc.residual);
}

TEST_CASE("Kirillov form and sheets") {
  CHECK(kirillov_form_check(classify_orbit(point(0, 1))));
  CHECK(kirillov_form_check(classify_orbit(point(0, -1))));
  CHECK(kirillov_form_check(classify_orbit_affc({Rational(0), Rational(0), Rational(1), Rational(0)}, 2)));
  CHECK_THROWS_AS(kirillov_form_check(classify_orbit(point(4, 0))), Error);
  validate_sheet({{0, 0}, {0, 1.0}, 0});
  validate_sheet({{0, 0}, {0, 2 * M_PI + 1.0}, 1});
  CHECK_THROWS_AS(validate_sheet({{0, 0}, {0, 1.0}, 1}), Error);
  CHECK(classify_orbit_affc({Rational(1), Rational(2), Rational(0), Rational(0)}).tag == OrbitClass::Tag::AffCPoint);
}
