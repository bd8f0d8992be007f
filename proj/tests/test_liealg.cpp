#include <doctest.h>

#include <cmath>

#include "orbitkit/liealg.hpp"

using namespace orbitkit;

namespace {

// (-ad_u)^n / n! summed directly on doubles; the oracle for the closed form.
RealMatrix series_oracle(double a, double b, int terms) {
  RealMatrix m{{0, 0}, {b, -a}}, term{{1, 0}, {0, 1}}, sum{{1, 0}, {0, 1}};
  for (int n = 1; n < terms; ++n) {
    RealMatrix next{{0, 0}, {0, 0}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) next[i][j] += term[i][k] * m[k][j] / n;
    term = next;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) sum[i][j] += term[i][j];
  }
  return sum;
}

AlgElement elem(const LieAlgebraPtr& g, std::vector<long> c) {
  std::vector<ScalarQ> v;
  for (long x : c) v.emplace_back(x);
  return AlgElement(g, v);
}

}  // namespace

TEST_CASE("aff(R) and aff(C) brackets") {
  auto r = aff_r();
  auto X = AlgElement::basis(r, "X"), Y = AlgElement::basis(r, "Y");
  CHECK(bracket(X, Y) == Y);
  CHECK(bracket(X, X).is_zero());
  CHECK(bracket(Y, X) == Y * ScalarQ(-1));
  auto c = aff_c();
  auto X1 = AlgElement::basis(c, "X1"), X2 = AlgElement::basis(c, "X2");
  auto Y1 = AlgElement::basis(c, "Y1"), Y2 = AlgElement::basis(c, "Y2");
  CHECK(bracket(X1, Y1) == Y1);
  CHECK(bracket(X1, Y2) == Y2);
  CHECK(bracket(X2, Y1) == Y2);
  CHECK(bracket(X2, Y2) == Y1 * ScalarQ(-1));
  CHECK(bracket(X1, X2).is_zero());
  CHECK(bracket(Y1, Y2).is_zero());
  CHECK_THROWS(bracket(X, X1));
}

TEST_CASE("ad matrices") {
  auto r = aff_r();
  auto adX = ad_matrix(AlgElement::basis(r, "X"));
  CHECK(adX == ScalarMatrix{{0, 0}, {0, 1}});
  CHECK(ad_matrix(AlgElement::zero(r)) == ScalarMatrix{{0, 0}, {0, 0}});
  // -ad(aX + bY) = [[0,0],[b,-a]]
  auto m = ad_matrix(elem(r, {3, -5}));
  CHECK(-m[1][0] == ScalarQ(-5));
  CHECK(-m[1][1] == ScalarQ(-3));
  CHECK(m[0][0].is_zero());
  CHECK(m[0][1].is_zero());
}

TEST_CASE("ad is linear in the coordinates") {
  for (const auto& g : {aff_r(), aff_c()}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> a, b;
      for (int k = 0; k < g->dim(); ++k) {
        a.push_back((trial * 7 + k * 3) % 5 - 2);
        b.push_back((trial * 3 + k * 5) % 7 - 3);
      }
      auto u = elem(g, a), v = elem(g, b);
      ScalarQ s(Rational(trial + 1, 3));
      auto lhs = ad_matrix(u * s + v), mu = ad_matrix(u), mv = ad_matrix(v);
      for (int i = 0; i < g->dim(); ++i)
        for (int j = 0; j < g->dim(); ++j) CHECK(lhs[i][j] == mu[i][j] * s + mv[i][j]);
    }
  }
}

TEST_CASE("exp(-ad) closed form") {
  auto id = exp_neg_ad_affr(0.0, 0.0);
  CHECK(id == RealMatrix{{1, 0}, {0, 1}});
  auto m = exp_neg_ad_affr(1.0, 1.0);
  CHECK(m[1][0] == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(m[1][1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(exp_neg_ad_affr(0.0, 2.0)[1][0] == doctest::Approx(2.0));
  auto exact = exp_neg_ad_affr(Rational(0), Rational(2));
  CHECK(exact.bottom_left == ExpPoly(Rational(2)));
  CHECK(exact.bottom_right == ExpPoly(Rational(1)));
}

TEST_CASE("exp(-ad) closed form agrees with the 30-term series on the 7x7 grid") {
  const double grid[] = {-2, -1, -0.5, 0, 0.5, 1, 2};
  for (double a : grid)
    for (double b : grid) {
      auto closed = exp_neg_ad_affr(a, b), series = series_oracle(a, b, 30);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::abs(closed[i][j] - series[i][j]) <= 1e-12);
    }
}

TEST_CASE("exp_neg_ad dispatch: closed form on aff(R), exact series elsewhere") {
  auto e = exp_neg_ad(AlgElement::basis(aff_r(), "X"), 30);
  CHECK(e.closed_form);
  CHECK(e.numeric[1][1] == doctest::Approx(std::exp(-1.0)));
  auto c = exp_neg_ad(AlgElement::basis(aff_c(), "X1"), 12);
  CHECK_FALSE(c.closed_form);
  // X1 acts diagonally with eigenvalue 1 on Y1, Y2: the series gives sum (-1)^n/n!.
  int y1 = aff_c()->index_of("Y1");
  CHECK(c.numeric[y1][y1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
}

TEST_CASE("Jacobi identity") {
  CHECK(jacobi_check(*aff_r()));
  CHECK(jacobi_check(*aff_c()));
  // c_{12}^1 := 1 added to aff(R) as a single table entry ([X,Y] = X + Y, [Y,X] = -Y)
  LieAlgebraSpec bad = *aff_r();
  bad.set_bracket_raw(0, 1, {ScalarQ(1), ScalarQ(1)});
  CHECK_FALSE(bad.is_antisymmetric());
  CHECK_FALSE(jacobi_check(bad));
  // an antisymmetric but non-Lie bracket on three generators
  LieAlgebraSpec bad3("perturbed3", {"X", "Y", "Z"});
  bad3.set_bracket(0, 1, {ScalarQ(0), ScalarQ(1), ScalarQ(0)});
  bad3.set_bracket(0, 2, {ScalarQ(1), ScalarQ(0), ScalarQ(0)});
  bad3.set_bracket(1, 2, {ScalarQ(0), ScalarQ(0), ScalarQ(1)});
  CHECK_FALSE(jacobi_check(bad3));
}
