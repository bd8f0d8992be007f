#include <doctest.h>

#include <random>

#include "orbitkit/errors.hpp"
#include "orbitkit/nc_forms.hpp"

using namespace orbitkit;

namespace {

NCForm random_form(const FormSpace& s, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> co(-3, 3);
  NCForm f;
  for (const auto& w : s.basis(degree)) {
    int c = co(rng);
    if (c != 0 && rng() % 3 == 0) f[w] = ScalarQ(Rational(c), Rational(co(rng)));
  }
  if (f.empty()) f[s.basis(degree).back()] = ScalarQ(1);
  return f;
}

NCForm sub(NCForm a, const NCForm& b) {
  form_add(a, b, ScalarQ(-1));
  return a;
}

std::vector<ScalarQ> unit_vec(int dim, int k) {
  std::vector<ScalarQ> v(dim);
  v[k] = 1;
  return v;
}

}  // namespace

TEST_CASE("built-in algebras") {
  for (const auto& a : {algebra_c(), algebra_c2(), algebra_m2()}) {
    INFO(a.name);
    CHECK(a.is_associative());
    CHECK(a.unit_laws_hold());
  }
  auto m2 = algebra_m2();
  // E12 E21 = E11
  auto p = m2.multiply(unit_vec(4, 1), unit_vec(4, 2));
  CHECK(p == unit_vec(4, 0));
  CHECK_THROWS_AS(builtin_fd_algebra("m3"), Error);
  FDAlgebra broken = algebra_c2();
  broken.mult[0][0][1] = 1;  // e1 e1 = e1 + e2
  CHECK_FALSE((broken.is_associative() && broken.unit_laws_hold()));
}

TEST_CASE("form space dimensions and cap") {
  FormSpace s(algebra_m2(), 3);
  for (int k = 0; k <= 3; ++k) {
    long expect = 4;
    for (int j = 0; j < k; ++j) expect *= 3;
    CHECK(s.dimension(k) == expect);
    CHECK(static_cast<long>(s.basis(k).size()) == expect);
  }
  std::mt19937 rng(1);
  CHECK_THROWS_AS(s.d(random_form(s, 3, rng)), Error);
  // adapted basis round trip
  auto v = std::vector<ScalarQ>{ScalarQ(2), ScalarQ(-1), ScalarQ(Rational(1, 3)), ScalarQ::i()};
  CHECK(s.from_adapted(s.to_adapted(v)) == v);
  CHECK(s.degree0(s.element(v)) == v);
}

TEST_CASE("d, b, B, kappa identities on random forms") {
  std::mt19937 rng(5);
  for (const auto& alg : {algebra_c2(), algebra_m2()}) {
    FormSpace s(alg, 5);
    for (int trial = 0; trial < 8; ++trial)
      for (int deg = 0; deg <= 3; ++deg) {
        INFO(alg.name << " degree " << deg);
        auto w = random_form(s, deg, rng);
        CHECK(s.d(s.d(w)).empty());
        CHECK(s.b(s.b(w)).empty());
        CHECK(s.connes_B(s.connes_B(w)).empty());
        // kappa = 1 - (db + bd)
        NCForm alt = w;
        form_add(alt, s.d(s.b(w)), ScalarQ(-1));
        form_add(alt, s.b(s.d(w)), ScalarQ(-1));
        CHECK(s.kappa(w) == alt);
        // kappa^{n+1} d = d on Omega^n
        CHECK(s.kappa_power(s.d(w), deg + 1) == s.d(w));
        // (kappa^n - 1)(kappa^{n+1} - 1) = 0 on Omega^n
        NCForm t = sub(s.kappa_power(w, deg + 1), w);
        CHECK(sub(s.kappa_power(t, deg), t).empty());
        // B d = 0 and b B + B b = 0
        if (deg <= 2) {
          CHECK(s.connes_B(s.d(w)).empty());
          NCForm anti = s.b(s.connes_B(w));
          if (deg >= 1) form_add(anti, s.connes_B(s.b(w)));
          CHECK(anti.empty());
        }
      }
  }
}

TEST_CASE("b on degree one and the kappa formula") {
  auto m2 = algebra_m2();
  FormSpace s(m2, 3);
  auto e12 = s.element(unit_vec(4, 1)), e21 = s.element(unit_vec(4, 2));
  auto w = s.product(e12, s.d(e21));
  NCForm expect = s.element(unit_vec(4, 0));
  form_add(expect, s.element(unit_vec(4, 3)), ScalarQ(-1));
  CHECK(s.b(w) == expect);  // E11 - E22
  // kappa(da1 da2) = da2 da1 up to the sign (-1)^{|w|} on w da, here w = da1
  auto kda = s.kappa(s.product(s.d(e12), s.d(e21)));
  CHECK(kda == form_scaled(s.product(s.d(e21), s.d(e12)), ScalarQ(-1)));
}

TEST_CASE("Fedosov product") {
  auto c2 = algebra_c2();
  FormSpace s(c2, 6);
  auto e1 = s.element(unit_vec(2, 0)), e2 = s.element(unit_vec(2, 1));
  NCForm expect = s.product(e1, e2);
  form_add(expect, s.product(s.d(e1), s.d(e2)), ScalarQ(-1));
  CHECK(s.fedosov(e1, e2) == expect);
  auto one = s.element({ScalarQ(1), ScalarQ(1)});
  std::mt19937 rng(2);
  for (int deg = 0; deg <= 6; ++deg) {
    auto w = random_form(s, deg, rng);
    CHECK(s.fedosov(one, w) == w);
    CHECK(s.fedosov(w, one) == w);
  }
  // exhaustive associativity over basis forms of C + C at cap 6
  std::vector<NCForm> basis;
  for (int deg = 0; deg <= 6; ++deg)
    for (const auto& w : s.basis(deg)) basis.push_back(NCForm{{w, ScalarQ(1)}});
  long failures = 0;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      auto xy = s.fedosov(x, y);
      for (const auto& z : basis)
        if (s.fedosov(xy, z) != s.fedosov(x, s.fedosov(y, z))) ++failures;
    }
  CHECK(failures == 0);
}

TEST_CASE("Fedosov associativity on M2 at cap 4, degree-0 and degree-1 generators") {
  FormSpace s(algebra_m2(), 4);
  std::vector<NCForm> gens;
  for (int k = 0; k < 4; ++k) {
    gens.push_back(s.element(unit_vec(4, k)));
    gens.push_back(s.d(s.element(unit_vec(4, k))));
  }
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) CHECK(s.fedosov(s.fedosov(x, y), z) == s.fedosov(x, s.fedosov(y, z)));
}
