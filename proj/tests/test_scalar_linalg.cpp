#include <doctest.h>

#include <random>

#include "orbitkit/errors.hpp"
#include "orbitkit/exact_linalg.hpp"
#include "orbitkit/scalar.hpp"

using namespace orbitkit;

namespace {

// Dense Gauss-Jordan over Q(i), row by row; the oracle for Echelon ranks.
int dense_rank(std::vector<std::vector<ScalarQ>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) piv = r;
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      ScalarQ f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

SparseVec<ScalarQ> sparse(const std::vector<ScalarQ>& row) {
  SparseVec<ScalarQ> v;
  for (int k = 0; k < static_cast<int>(row.size()); ++k)
    if (!row[k].is_zero()) v.emplace_back(k, row[k]);
  return v;
}

}  // namespace

TEST_CASE("ScalarQ arithmetic and parsing") {
  ScalarQ i = ScalarQ::i();
  CHECK(i * i == ScalarQ(-1));
  CHECK(ScalarQ(1) / (ScalarQ(1) + i) == ScalarQ(Rational(1, 2), Rational(-1, 2)));
  CHECK(parse_scalar("1/2-3i") == ScalarQ(Rational(1, 2), Rational(-3)));
  CHECK(parse_scalar("-i") == -i);
  CHECK(parse_scalar(ScalarQ(Rational(-7, 3), Rational(5, 2)).str()) == ScalarQ(Rational(-7, 3), Rational(5, 2)));
  CHECK(binomial(6, 3) == 20);
  CHECK(factorial(5) == 120);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK_THROWS_AS(ScalarQ(0).inverse(), Error);
}

TEST_CASE("Echelon rank matches dense elimination on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-2, 2), shape(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = shape(rng), cols = shape(rng);
    std::vector<std::vector<ScalarQ>> m(rows, std::vector<ScalarQ>(cols));
    for (auto& r : m)
      for (auto& x : r) x = ScalarQ(Rational(val(rng)), Rational(trial % 3 == 0 ? val(rng) : 0));
    // force some dependence
    if (rows > 2)
      for (int k = 0; k < cols; ++k) m[rows - 1][k] = m[0][k] * ScalarQ(2) - m[1][k];
    std::vector<SparseVec<ScalarQ>> vs;
    for (const auto& r : m) vs.push_back(sparse(r));
    CHECK(exact_rank(vs, cols) == dense_rank(m));
  }
}

TEST_CASE("Echelon membership and full reduction") {
  Echelon<Rational> e(3);
  CHECK(e.insert({{0, Rational(1)}, {1, Rational(1)}}));
  CHECK(e.insert({{1, Rational(1)}, {2, Rational(1)}}));
  CHECK_FALSE(e.insert({{0, Rational(1)}, {2, Rational(-1)}}));
  CHECK(e.rank() == 2);
  CHECK(e.contains({{0, Rational(2)}, {1, Rational(3)}, {2, Rational(1)}}));
  CHECK_FALSE(e.contains({{2, Rational(1)}}));
  auto r = e.reduce_full({{2, Rational(1)}});
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == 2);
}
