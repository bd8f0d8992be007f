#include <doctest.h>

#include <random>

#include "orbitkit/errors.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/laurent.hpp"

using namespace orbitkit;

namespace {

Laurent t(int k, const ScalarQ& c = 1) { return Laurent(c, k); }

Laurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> ex(-3, 3), co(-3, 3), nt(0, 3);
  Laurent l;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) l += t(ex(rng), ScalarQ(Rational(co(rng), 2)));
  return l;
}

// Invertible by construction: a diagonal of monomials times unipotent factors.
// Returns the matrix and the exponent of its determinant, the winding oracle.
std::pair<LaurentMatrix, long> random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> ex(-4, 4), co(1, 5);
  LaurentMatrix d = identity_matrix(n);
  long k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int e = ex(rng);
    d[i][i] = t(e, ScalarQ(co(rng)));
    k += e;
  }
  LaurentMatrix u = identity_matrix(n), l = identity_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j) u[i][j] = random_laurent(rng);
      if (i > j) l[i][j] = random_laurent(rng);
    }
  return {matmul(matmul(u, d), l), k};
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  Laurent a = t(1) + t(-1), b = t(1) - t(-1);
  CHECK(a * b == t(2) - t(-2));
  CHECK(a.derivative() == t(0) - t(-2));
  CHECK((a - a).is_zero());
  CHECK(t(3).shifted(-3) == t(0));
  CHECK(t(2, ScalarQ(5)).coeff(2) == ScalarQ(5));
  CHECK(t(2).coeff(1).is_zero());
}

TEST_CASE("determinant and adjugate") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + trial % 4;
    LaurentMatrix g(n, std::vector<Laurent>(n));
    for (auto& row : g)
      for (auto& e : row) e = random_laurent(rng);
    auto adj = adjugate(g);
    auto prod = matmul(g, adj);
    Laurent det = determinant(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(prod[i][j] == (i == j ? det : Laurent()));
  }
}

TEST_CASE("winding examples") {
  CHECK(chern1_winding({{t(1)}}) == 1);
  CHECK(chern1_winding(identity_matrix(3)) == 0);
  CHECK(chern1_winding({{t(2), Laurent()}, {Laurent(), t(-3)}}) == -1);
  for (int k = -5; k <= 5; ++k) CHECK(chern1_winding({{t(k, ScalarQ(7))}}) == k);
  // non-invertible
  CHECK_THROWS_AS(chern1_winding({{t(0) + t(1)}}), Error);
  CHECK_THROWS_AS(chern1_winding({{t(1), t(1)}, {t(1), t(1)}}), Error);
}

TEST_CASE("winding is additive and equals the determinant exponent") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 3;
    auto [g, kg] = random_invertible(rng, n);
    auto [h, kh] = random_invertible(rng, n);
    CHECK(chern1_winding(g) == kg);
    CHECK(chern1_winding(h) == kh);
    CHECK(chern1_winding(matmul(g, h)) == chern1_winding(g) + chern1_winding(h));
  }
}

TEST_CASE("Laurent matrices from JSON") {
  auto g = laurent_matrix_from_json(read_json_file(ORBITKIT_TEST_DATA "/winding.json"));
  CHECK(chern1_winding(g) == -1);
  CHECK_THROWS_AS(chern1_winding(laurent_matrix_from_json(read_json_file(ORBITKIT_TEST_DATA "/singular.json"))), Error);
  CHECK_THROWS_AS(laurent_matrix_from_json(Json::parse(R"({"matrix": [[1, 2]]})")), Error);
}
