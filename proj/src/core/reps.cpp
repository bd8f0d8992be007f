#include "orbitkit/reps.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Returns true and sets m when v is within tol of an integer.
bool near_integer(double v, long& m, double tol = 1e-9) {
  double r = std::round(v);
  if (std::abs(v - r) > tol) return false;
  m = static_cast<long>(r);
  return true;
}

// Cubic Lagrange interpolation of samples at fractional index t; false when
// the stencil leaves the grid or touches an invalid sample.
bool interpolate(const std::vector<cplx>& v, const std::vector<char>& ok, double t, cplx& out) {
  auto base = static_cast<long>(std::floor(t)) - 1;
  auto n = static_cast<long>(v.size());
  if (base < 0 || base + 3 >= n) return false;
  double u = t - static_cast<double>(base);  // in [1, 2)
  cplx acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (!ok[static_cast<std::size_t>(base + i)]) return false;
    double w = 1.0;
    for (int j = 0; j < 4; ++j)
      if (j != i) w *= (u - j) / static_cast<double>(i - j);
    acc += w * v[static_cast<std::size_t>(base + i)];
  }
  out = acc;
  return true;
}

}  // namespace

AffineElement compose(const AffineElement& g1, const AffineElement& g2) { return {g1.a * g2.a, g1.b + g1.a * g2.b}; }

AffineElement exp_affr(double alpha, double beta, double t) {
  if (alpha == 0.0) return {1.0, beta * t};
  return {std::exp(t * alpha), beta * std::expm1(t * alpha) / alpha};
}

SampledRStar sample_rstar(const LogGrid& grid, const std::function<cplx(double)>& f) {
  if (grid.n < 4 || !(grid.s_max > grid.s_min)) fail(ErrorKind::InvalidInput, "invalid log grid");
  SampledRStar out;
  out.grid = grid;
  for (int h = 0; h < 2; ++h) {
    double sign = h == 0 ? 1.0 : -1.0;
    out.values[h].resize(static_cast<std::size_t>(grid.n));
    out.valid[h].assign(static_cast<std::size_t>(grid.n), 1);
    for (int k = 0; k < grid.n; ++k) out.values[h][static_cast<std::size_t>(k)] = f(sign * std::exp(grid.s(k)));
  }
  return out;
}

SampledRStar rep_S(const AffineElement& g, const SampledRStar& f) {
  if (!(g.a > 0.0)) fail(ErrorKind::InvalidInput, "S(g) needs a > 0");
  const auto& grid = f.grid;
  double shift = std::log(g.a) / grid.delta();
  long m = 0;
  bool lattice = near_integer(shift, m);
  SampledRStar out;
  out.grid = grid;
  for (int h = 0; h < 2; ++h) {
    double sign = h == 0 ? 1.0 : -1.0;
    out.values[h].assign(static_cast<std::size_t>(grid.n), 0.0);
    out.valid[h].assign(static_cast<std::size_t>(grid.n), 0);
    for (int k = 0; k < grid.n; ++k) {
      cplx val;
      bool ok;
      if (lattice) {
        long src = k + m;
        ok = src >= 0 && src < grid.n && f.valid[h][static_cast<std::size_t>(src)];
        if (ok) val = f.values[h][static_cast<std::size_t>(src)];
      } else {
        ok = interpolate(f.values[h], f.valid[h], k + shift, val);
      }
      if (!ok) continue;
      double y = sign * std::exp(grid.s(k));
      out.values[h][static_cast<std::size_t>(k)] = std::polar(1.0, g.b * y) * val;
      out.valid[h][static_cast<std::size_t>(k)] = 1;
    }
  }
  return out;
}

cplx rep_char_U(int eps, double lambda, const AffineElement& g) {
  if (g.a == 0.0) fail(ErrorKind::InvalidInput, "U(g) needs a != 0");
  if (eps != 0 && eps != 1) fail(ErrorKind::InvalidInput, "epsilon must be 0 or 1");
  cplx v = std::polar(1.0, lambda * std::log(std::abs(g.a)));
  return (eps == 1 && g.a < 0.0) ? -v : v;
}

double rstar_norm(const SampledRStar& f) {
  double acc = 0.0;
  for (int h = 0; h < 2; ++h)
    for (std::size_t k = 0; k < f.values[h].size(); ++k)
      if (f.valid[h][k]) acc += std::norm(f.values[h][k]);
  return std::sqrt(acc * f.grid.delta());
}

double rstar_sup_diff(const SampledRStar& f, const SampledRStar& g) {
  double worst = 0.0;
  for (int h = 0; h < 2; ++h)
    for (std::size_t k = 0; k < f.values[h].size(); ++k)
      if (f.valid[h][k] && g.valid[h][k]) worst = std::max(worst, std::abs(f.values[h][k] - g.values[h][k]));
  return worst;
}

double CylinderGrid::hi() const { return kTwoPi / m; }

SampledCylinder sample_cylinder(const CylinderGrid& grid, const std::function<cplx(cplx)>& f) {
  if (grid.nr < 4 || grid.m < 4 || !(grid.R > 0)) fail(ErrorKind::InvalidInput, "invalid cylinder grid");
  SampledCylinder out;
  out.grid = grid;
  out.values.resize(static_cast<std::size_t>(grid.nr) * static_cast<std::size_t>(grid.m));
  out.valid.assign(out.values.size(), 1);
  for (int k = 0; k < grid.m; ++k)
    for (int j = 0; j < grid.nr; ++j)
      out.values[static_cast<std::size_t>(k) * static_cast<std::size_t>(grid.nr) + static_cast<std::size_t>(j)] = f({grid.re(j), grid.im(k)});
  return out;
}

std::pair<long, long> cylinder_wrap(long k, long dk, long m) {
  long t = k + dk;
  long q = t / m, r = t % m;
  if (r < 0) {
    r += m;
    q -= 1;
  }
  return {q, r};
}

cplx cylinder_add(cplx x, cplx z) {
  cplx s = x + z;
  double t = s.imag() / kTwoPi;
  return {s.real(), kTwoPi * (t - std::floor(t))};
}

cplx rep_Ttheta_point(double theta, const AffCCoverElement& g, const std::function<cplx(cplx)>& f, cplx x) {
  double wraps = std::floor((x + g.z).imag() / kTwoPi);
  double phase = (g.w * x).real() + kTwoPi * theta * wraps;
  return std::polar(1.0, phase) * f(cylinder_add(x, g.z));
}

SampledCylinder rep_Ttheta(double theta, const AffCCoverElement& g, const SampledCylinder& f) {
  const auto& grid = f.grid;
  SampledCylinder out;
  out.grid = grid;
  out.values.assign(f.values.size(), 0.0);
  out.valid.assign(f.values.size(), 0);
  auto idx = [&](long k, long j) { return static_cast<std::size_t>(k) * static_cast<std::size_t>(grid.nr) + static_cast<std::size_t>(j); };
  long dr = 0, dk = 0;
  bool lattice = near_integer(g.z.real() / grid.hr(), dr) && near_integer(g.z.imag() / grid.hi(), dk);
  for (long k = 0; k < grid.m; ++k) {
    for (long j = 0; j < grid.nr; ++j) {
      cplx x(grid.re(static_cast<int>(j)), grid.im(static_cast<int>(k)));
      cplx val;
      double wraps;
      if (lattice) {
        auto [q, kk] = cylinder_wrap(k, dk, grid.m);
        long jj = j + dr;
        if (jj < 0 || jj >= grid.nr || !f.valid[idx(kk, jj)]) continue;
        val = f.values[idx(kk, jj)];
        wraps = static_cast<double>(q);
      } else {
        cplx s = x + g.z;
        wraps = std::floor(s.imag() / kTwoPi);
        double tr = (s.real() + grid.R) / grid.hr();
        double ti = (s.imag() - kTwoPi * wraps) / grid.hi();
        auto j0 = static_cast<long>(std::floor(tr));
        auto k0 = static_cast<long>(std::floor(ti));
        if (j0 < 0 || j0 + 1 >= grid.nr) continue;
        double fr = tr - static_cast<double>(j0), fi = ti - static_cast<double>(k0);
        long k0m = ((k0 % grid.m) + grid.m) % grid.m, k1m = (k0m + 1) % grid.m;
        if (!f.valid[idx(k0m, j0)] || !f.valid[idx(k0m, j0 + 1)] || !f.valid[idx(k1m, j0)] || !f.valid[idx(k1m, j0 + 1)]) continue;
        val = (1 - fi) * ((1 - fr) * f.values[idx(k0m, j0)] + fr * f.values[idx(k0m, j0 + 1)]) +
              fi * ((1 - fr) * f.values[idx(k1m, j0)] + fr * f.values[idx(k1m, j0 + 1)]);
      }
      double phase = (g.w * x).real() + kTwoPi * theta * wraps;
      out.values[idx(k, j)] = std::polar(1.0, phase) * val;
      out.valid[idx(k, j)] = 1;
    }
  }
  return out;
}

double cylinder_norm(const SampledCylinder& f) {
  double acc = 0.0;
  for (std::size_t k = 0; k < f.values.size(); ++k)
    if (f.valid[k]) acc += std::norm(f.values[k]);
  return std::sqrt(acc * f.grid.hr() * f.grid.hi());
}

double cylinder_sup_diff(const SampledCylinder& f, const SampledCylinder& g) {
  double worst = 0.0;
  for (std::size_t k = 0; k < f.values.size(); ++k)
    if (f.valid[k] && g.valid[k]) worst = std::max(worst, std::abs(f.values[k] - g.values[k]));
  return worst;
}

RepCheckReport rep_check(const std::string& family, int trials, std::uint64_t seed, double tolerance) {
  if (trials < 1) fail(ErrorKind::InvalidInput, "trials must be >= 1");
  RepCheckReport rep;
  rep.family = family;
  rep.trials = trials;
  rep.seed = seed;
  rep.tolerance = tolerance;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };
  auto randint = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  if (family == "S") {
    LogGrid grid;
    auto f = sample_rstar(grid, [](double y) {
      double s = std::log(std::abs(y));
      return cplx(std::exp(-0.5 * s * s), y < 0 ? 0.25 * s * std::exp(-0.5 * s * s) : 0.0);
    });
    double norm_f = rstar_norm(f);
    for (int t = 0; t < trials; ++t) {
      AffineElement g1{std::exp(static_cast<double>(randint(-200, 200)) * grid.delta()), uniform(-2, 2)};
      AffineElement g2{std::exp(static_cast<double>(randint(-200, 200)) * grid.delta()), uniform(-2, 2)};
      auto lhs = rep_S(g1, rep_S(g2, f));
      auto rhs = rep_S(compose(g1, g2), f);
      rep.max_group_law = std::max(rep.max_group_law, rstar_sup_diff(lhs, rhs));
      rep.max_unitarity = std::max(rep.max_unitarity, std::abs(rstar_norm(rep_S(g1, f)) - norm_f) / norm_f);
    }
  } else if (family == "U") {
    for (int t = 0; t < trials; ++t) {
      int eps = static_cast<int>(randint(0, 1));
      double lambda = uniform(-5, 5);
      auto rand_a = [&] { return (unit(rng) < 0.5 ? -1.0 : 1.0) * std::exp(uniform(-3, 3)); };
      AffineElement g1{rand_a(), uniform(-2, 2)}, g2{rand_a(), uniform(-2, 2)};
      cplx lhs = rep_char_U(eps, lambda, g1) * rep_char_U(eps, lambda, g2);
      cplx rhs = rep_char_U(eps, lambda, compose(g1, g2));
      rep.max_group_law = std::max(rep.max_group_law, std::abs(lhs - rhs));
      rep.max_unitarity = std::max(rep.max_unitarity, std::abs(std::abs(rep_char_U(eps, lambda, g1)) - 1.0));
    }
  } else if (family == "Ttheta") {
    CylinderGrid grid;
    auto f = sample_cylinder(grid, [](cplx x) {
      double r = x.real(), a = x.imag();
      return std::exp(-0.5 * r * r) * cplx(1.0 + 0.5 * std::cos(a), 0.3 * std::sin(2.0 * a));
    });
    double norm_f = cylinder_norm(f);
    for (int t = 0; t < trials; ++t) {
      double theta = unit(rng);
      AffCCoverElement g1, g2, g12;
      if (t % 2 == 0) {
        // Lattice translations, including several windings around S^1.
        g1.z = {static_cast<double>(randint(-20, 20)) * grid.hr(), static_cast<double>(randint(-3L * grid.m, 3L * grid.m)) * grid.hi()};
        g2.z = {static_cast<double>(randint(-20, 20)) * grid.hr(), static_cast<double>(randint(-3L * grid.m, 3L * grid.m)) * grid.hi()};
        g12.z = g1.z + g2.z;
      } else {
        g1.w = {uniform(-2, 2), uniform(-2, 2)};
        g2.w = {uniform(-2, 2), uniform(-2, 2)};
        g12.w = g1.w + g2.w;
      }
      auto lhs = rep_Ttheta(theta, g1, rep_Ttheta(theta, g2, f));
      auto rhs = rep_Ttheta(theta, g12, f);
      rep.max_group_law = std::max(rep.max_group_law, cylinder_sup_diff(lhs, rhs));
      rep.max_unitarity = std::max(rep.max_unitarity, std::abs(cylinder_norm(rep_Ttheta(theta, g1, f)) - norm_f) / norm_f);
    }
  } else {
    fail(ErrorKind::InvalidInput, "unknown representation family '" + family + "' (expected S, U or Ttheta)");
  }
  rep.pass = rep.max_group_law <= tolerance && rep.max_unitarity <= tolerance;
  return rep;
}

LogTestFunction log_gaussian() {
  return {[](double s) { return cplx(std::exp(-0.5 * s * s)); }, [](double s) { return cplx(-s * std::exp(-0.5 * s * s)); }};
}

double generator_check(double alpha, double beta, const LogTestFunction& f, double step, const LogGrid& grid) {
  if (!(step > 0)) fail(ErrorKind::InvalidInput, "step must be positive");
  auto plus = exp_affr(alpha, beta, step), minus = exp_affr(alpha, beta, -step);
  double diff = 0.0, ref = 0.0;
  for (int h = 0; h < 2; ++h) {
    double sign = h == 0 ? 1.0 : -1.0;
    for (int k = 0; k < grid.n; ++k) {
      double s = grid.s(k), y = sign * std::exp(s);
      // (S(g) f)(y) = e^{i b y} F(s + ln a)
      cplx fp = std::polar(1.0, plus.b * y) * f.value(s + std::log(plus.a));
      cplx fm = std::polar(1.0, minus.b * y) * f.value(s + std::log(minus.a));
      cplx fd = (fp - fm) / (2.0 * step);
      cplx target = alpha * f.derivative(s) + cplx(0.0, beta * y) * f.value(s);
      diff += std::norm(fd - target);
      ref += std::norm(target);
    }
  }
  if (ref == 0.0) return std::sqrt(diff);
  return std::sqrt(diff / ref);
}

GeneratorConvergence generator_convergence(double alpha, double beta, const LogTestFunction& f, double step, const LogGrid& grid) {
  GeneratorConvergence c;
  c.coarse = generator_check(alpha, beta, f, step, grid);
  c.fine = generator_check(alpha, beta, f, step / 2.0, grid);
  c.ratio = c.fine > 0.0 ? c.coarse / c.fine : 0.0;
  return c;
}

}  // namespace orbitkit
