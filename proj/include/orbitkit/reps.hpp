#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace orbitkit {

using cplx = std::complex<double>;

/// g = [[a, b], [0, 1]]; S needs a > 0, U accepts any a != 0.
struct AffineElement {
  double a = 1.0;
  double b = 0.0;
};

/// (a1, b1)(a2, b2) = (a1 a2, b1 + a1 b2).
AffineElement compose(const AffineElement& g1, const AffineElement& g2);
/// exp(t (alpha X + beta Y)) = (e^{t alpha}, beta (e^{t alpha} - 1)/alpha), b = beta t when alpha = 0.
AffineElement exp_affr(double alpha, double beta, double t);

/// Log-spaced sampling of R*: y = +-e^s with s_k = s_min + k delta, k < n.
struct LogGrid {
  double s_min = -10.0;
  double s_max = 10.0;
  int n = 2048;
  double delta() const { return (s_max - s_min) / n; }
  double s(int k) const { return s_min + k * delta(); }
};

/// Samples on both half-lines (index 0: y > 0, index 1: y < 0) with a validity mask.
struct SampledRStar {
  LogGrid grid;
  std::vector<cplx> values[2];
  std::vector<char> valid[2];
};

SampledRStar sample_rstar(const LogGrid& grid, const std::function<cplx(double y)>& f);

/// (S(g) f)(y) = e^{i b y} f(a y). Exact index shift when ln a is a multiple of
/// the grid step, cubic interpolation in s otherwise; points mapped off the grid
/// are marked invalid. Throws InvalidInput when a <= 0.
SampledRStar rep_S(const AffineElement& g, const SampledRStar& f);

/// U^eps_lambda(g) = |a|^{i lambda} (sgn a)^eps. Throws InvalidInput when a = 0 or eps not in {0,1}.
cplx rep_char_U(int eps, double lambda, const AffineElement& g);

/// L^2 norm for dy/|y| (= ds) over valid samples.
double rstar_norm(const SampledRStar& f);
/// Sup-norm of the difference over jointly valid samples.
double rstar_sup_diff(const SampledRStar& f, const SampledRStar& g);

/// Element (z, w) of the universal cover of Aff(C).
struct AffCCoverElement {
  cplx z = 0.0;
  cplx w = 0.0;
};

/// R x S^1 sampled as Re x = -R + j hr (j < nr), Im x = 2 pi k / m (k < m).
struct CylinderGrid {
  double R = 20.0;
  int nr = 512;
  int m = 64;
  double hr() const { return 2.0 * R / nr; }
  double hi() const;  // 2 pi / m
  double re(int j) const { return -R + j * hr(); }
  double im(int k) const { return k * hi(); }
};

struct SampledCylinder {
  CylinderGrid grid;
  std::vector<cplx> values;  // [k][j]
  std::vector<char> valid;
};

SampledCylinder sample_cylinder(const CylinderGrid& grid, const std::function<cplx(cplx x)>& f);

/// Floor division for the winding bookkeeping: returns (floor((k + dk)/m), (k + dk) mod m).
std::pair<long, long> cylinder_wrap(long k, long dk, long m);

/// x (+) z = Re(x+z) + 2 pi i frac(Im(x+z)/(2 pi)).
cplx cylinder_add(cplx x, cplx z);

/// Pointwise formula exp(i(Re(w x) + 2 pi theta floor(Im(x+z)/(2 pi)))) f(x (+) z).
cplx rep_Ttheta_point(double theta, const AffCCoverElement& g, const std::function<cplx(cplx)>& f, cplx x);

/// Sampled version. Lattice z (Re z / hr and Im z / hi integers) uses exact
/// integer bookkeeping; otherwise bilinear interpolation (Im periodic).
SampledCylinder rep_Ttheta(double theta, const AffCCoverElement& g, const SampledCylinder& f);

double cylinder_norm(const SampledCylinder& f);
double cylinder_sup_diff(const SampledCylinder& f, const SampledCylinder& g);

struct RepCheckReport {
  std::string family;  // "S", "U", "Ttheta"
  int trials = 0;
  std::uint64_t seed = 0;
  double max_group_law = 0.0;
  double max_unitarity = 0.0;
  double tolerance = 1e-12;
  bool pass = false;
};

/// Group-law and unitarity residuals over `trials` seeded random pairs.
/// S: lattice-compatible dilations; U: random (eps, lambda) and a != 0;
/// Ttheta: random theta, alternating lattice translations and w-only elements.
RepCheckReport rep_check(const std::string& family, int trials, std::uint64_t seed, double tolerance = 1e-12);

/// Test function on R* given in the log coordinate: f(+-e^s) = F(s), with F'.
struct LogTestFunction {
  std::function<cplx(double)> value;
  std::function<cplx(double)> derivative;
};

LogTestFunction log_gaussian();

/// Relative L^2 (ds) residual between the central difference
/// (S(exp(tZ)) f - S(exp(-tZ)) f)/(2t) and alpha F'(s) + i beta y F(s).
double generator_check(double alpha, double beta, const LogTestFunction& f, double step, const LogGrid& grid = {});

struct GeneratorConvergence {
  double coarse = 0.0, fine = 0.0, ratio = 0.0;
};

/// Residuals at `step` and `step/2` and their ratio (about 4 for a second-order scheme).
GeneratorConvergence generator_convergence(double alpha, double beta, const LogTestFunction& f, double step, const LogGrid& grid = {});

}  // namespace orbitkit
