#include <doctest.h>

#include <cmath>
#include <random>

#include "orbitkit/errors.hpp"
#include "orbitkit/reps.hpp"

using namespace orbitkit;

namespace {

const cplx I(0.0, 1.0);

cplx bump(double y) { return std::exp(-y * y / 8.0) * (1.0 + 0.3 * y); }

}  // namespace

TEST_CASE("affine group law and exponential") {
  auto g = compose({2.0, 1.0}, {3.0, -4.0});
  CHECK(g.a == 6.0);
  CHECK(g.b == -7.0);
  auto e = exp_affr(1.0, 2.0, 0.5);
  CHECK(e.a == doctest::Approx(std::exp(0.5)));
  CHECK(e.b == doctest::Approx(2.0 * (std::exp(0.5) - 1.0)));
  auto e0 = exp_affr(0.0, 3.0, 2.0);
  CHECK(e0.a == 1.0);
  CHECK(e0.b == doctest::Approx(6.0));
}

TEST_CASE("S acts by e^{iby} f(ay)") {
  LogGrid grid;
  auto f = sample_rstar(grid, bump);
  auto same = rep_S({1.0, 0.0}, f);
  CHECK(rstar_sup_diff(same, f) == 0.0);
  // a on the grid lattice: exact index shift
  const double a = std::exp(37 * grid.delta()), b = 0.7;
  auto g = rep_S({a, b}, f);
  double worst = 0;
  for (int side = 0; side < 2; ++side)
    for (int k = 0; k < grid.n; ++k) {
      if (!g.valid[side][k]) continue;
      double y = (side == 0 ? 1.0 : -1.0) * std::exp(grid.s(k));
      worst = std::max(worst, std::abs(g.values[side][k] - std::exp(I * b * y) * bump(a * y)));
    }
  CHECK(worst <= 1e-12);
  // g = (1, b) multiplies by e^{iby}
  auto m = rep_S({1.0, -2.0}, f);
  for (int k = 0; k < grid.n; k += 97) {
    double y = std::exp(grid.s(k));
    CHECK(std::abs(m.values[0][k] - std::exp(-2.0 * I * y) * f.values[0][k]) <= 1e-14);
  }
  CHECK_THROWS_AS(rep_S({0.0, 1.0}, f), Error);
  CHECK_THROWS_AS(rep_S({-1.0, 1.0}, f), Error);
}

TEST_CASE("S(2,0) moves a peak at y = 4 to y = 2") {
  LogGrid grid;
  auto peak = sample_rstar(grid, [](double y) { return cplx(std::exp(-50.0 * std::pow(std::log(std::abs(y)) - std::log(4.0), 2))); });
  auto g = rep_S({2.0, 0.0}, peak);
  int best = 0;
  for (int k = 0; k < grid.n; ++k)
    if (g.valid[0][k] && std::abs(g.values[0][k]) > std::abs(g.values[0][best])) best = k;
  CHECK(std::exp(grid.s(best)) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("characters U") {
  CHECK(std::abs(rep_char_U(0, 1.0, {1.0, 0.0}) - 1.0) == 0.0);
  CHECK(std::abs(rep_char_U(0, 1.0, {std::exp(1.0), 0.0}) - std::exp(I)) <= 1e-15);
  CHECK(std::abs(rep_char_U(1, 0.0, {-1.0, 0.0}) + 1.0) <= 1e-15);
  CHECK_THROWS_AS(rep_char_U(0, 1.0, {0.0, 0.0}), Error);
  CHECK_THROWS_AS(rep_char_U(2, 1.0, {1.0, 0.0}), Error);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 50; ++t) {
    AffineElement g{u(rng), u(rng)}, h{u(rng), u(rng)};
    for (int eps : {0, 1}) {
      double lam = u(rng);
      CHECK(std::abs(rep_char_U(eps, lam, compose(g, h)) - rep_char_U(eps, lam, g) * rep_char_U(eps, lam, h)) <= 1e-12);
      CHECK(std::abs(std::abs(rep_char_U(eps, lam, g)) - 1.0) <= 1e-14);
    }
  }
}

TEST_CASE("T_theta examples") {
  auto f = [](cplx x) { return std::exp(-x.real() * x.real() / 4.0) * (2.0 + std::cos(x.imag())); };
  CylinderGrid grid;
  auto s = sample_cylinder(grid, f);
  CHECK(cylinder_sup_diff(rep_Ttheta(0.3, {0.0, 0.0}, s), s) == 0.0);
  // real z shifts Re x only
  cplx x(1.0, 2.0);
  CHECK(std::abs(rep_Ttheta_point(0.3, {cplx(0.5, 0.0), 0.0}, f, x) - f(cplx(1.5, 2.0))) <= 1e-15);
  // crossing 2 pi picks up e^{2 pi i theta}
  const double theta = 0.3;
  cplx z(0.0, 2 * M_PI - 1.0);
  cplx expect = std::exp(I * 2.0 * M_PI * theta) * f(cylinder_add(x, z));
  CHECK(std::abs(rep_Ttheta_point(theta, {z, 0.0}, f, x) - expect) <= 1e-14);
  CHECK(cylinder_add(x, z).imag() == doctest::Approx(1.0));
  auto [q, r] = cylinder_wrap(60, 10, 64);
  CHECK(q == 1);
  CHECK(r == 6);
  auto [q2, r2] = cylinder_wrap(3, -10, 64);
  CHECK(q2 == -1);
  CHECK(r2 == 57);
}

TEST_CASE("T_theta cocycle: two translations equal one") {
  CylinderGrid grid;
  auto f = sample_cylinder(grid, [](cplx x) { return std::exp(-x.real() * x.real() / 4.0) * std::exp(I * x.imag()); });
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> dj(-20, 20), dk(-150, 150);
  for (int t = 0; t < 20; ++t) {
    double theta = (t + 0.5) / 20.0;
    cplx z1(dj(rng) * grid.hr(), dk(rng) * grid.hi()), z2(dj(rng) * grid.hr(), dk(rng) * grid.hi());
    auto two = rep_Ttheta(theta, {z1, 0.0}, rep_Ttheta(theta, {z2, 0.0}, f));
    auto one = rep_Ttheta(theta, {z1 + z2, 0.0}, f);
    CHECK(cylinder_sup_diff(two, one) <= 1e-12);
  }
}

TEST_CASE("group law and unitarity over seeded trials") {
  for (const char* fam : {"S", "U", "Ttheta"}) {
    auto r = rep_check(fam, 100, 42);
    CHECK_MESSAGE(r.pass, fam);
    CHECK(r.max_group_law <= 1e-12);
    CHECK(r.max_unitarity <= 1e-12);
    auto again = rep_check(fam, 100, 42);
    CHECK(again.max_group_law == r.max_group_law);
  }
  CHECK_THROWS_AS(rep_check("V", 10, 1), Error);
}

TEST_CASE("infinitesimal generators") {
  auto f = log_gaussian();
  CHECK(generator_check(0.0, 0.0, f, 1e-4) == 0.0);
  CHECK(generator_check(1.0, 0.0, f, 1e-4) <= 1e-6);
  CHECK(generator_check(0.0, 1.0, f, 1e-5) <= 1e-8);
  for (auto [a, b] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}) {
    auto c = generator_convergence(a, b, f, 0.01);
    CHECK(c.ratio == doctest::Approx(4.0).epsilon(0.125));
  }
}
