#pragma once

#include <complex>
#include <string>
#include <vector>

#include "orbitkit/liealg.hpp"

namespace orbitkit {

using cplx = std::complex<double>;

/// Rectangle [-L, L) x [-Lq, Lq) sampled with n x nq points. The fast axis is
/// p (position side) or x (its Fourier dual); q is the slow axis.
struct GridSpec {
  double L = 20.0;
  int n = 4096;
  double Lq = 20.0;
  int nq = 256;

  /// Throws InvalidInput unless both sizes are powers of two >= 16.
  void validate() const;
  double hp() const { return 2.0 * L / n; }
  double hx() const;  // pi / L
  double hq() const { return 2.0 * Lq / nq; }
  double p(int j) const { return -L + j * hp(); }
  double x(int k) const { return (k - n / 2) * hx(); }
  double q(int i) const { return -Lq + i * hq(); }
};

enum class Domain { PQ, XQ };

/// Samples on the grid, row-major [iq][i_fast].
struct GridFunction {
  GridSpec spec;
  Domain domain = Domain::XQ;
  std::vector<cplx> data;

  GridFunction() = default;
  GridFunction(GridSpec s, Domain d);
  cplx& at(int iq, int k) { return data[static_cast<std::size_t>(iq) * static_cast<std::size_t>(spec.n) + static_cast<std::size_t>(k)]; }
  const cplx& at(int iq, int k) const { return data[static_cast<std::size_t>(iq) * static_cast<std::size_t>(spec.n) + static_cast<std::size_t>(k)]; }
  double fast_coord(int k) const { return domain == Domain::PQ ? spec.p(k) : spec.x(k); }
  double l2_norm() const;
};

/// exp(-((f - c)^2 / (2 s^2) + (q - cq)^2 / 2)) on the given domain.
GridFunction gaussian(const GridSpec& spec, Domain domain, double center = 0.0, double width = 1.0, double q_center = 0.0);

/// Continuous-transform approximations, exact inverses of each other on the grid:
/// F^{-1} u (p) = (2 pi)^{-1/2} int e^{ipx} u(x) dx, F v (x) = (2 pi)^{-1/2} int e^{-ipx} v(p) dp.
GridFunction fourier_inverse_p(const GridFunction& u);
GridFunction fourier_p(const GridFunction& v);

/// Spectral derivatives (periodic box). Nyquist mode dropped for odd orders.
GridFunction spectral_d_fast(const GridFunction& f, int order);
GridFunction spectral_dq(const GridFunction& f, int order);

/// 8th-order periodic central finite differences, applied `order` times.
GridFunction fd_d_fast(const GridFunction& f, int order);
GridFunction fd_dq(const GridFunction& f, int order);

double relative_l2(const GridFunction& value, const GridFunction& reference);

struct HarnessResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

/// id 1: d_p F^{-1} u = i F^{-1}(x u), left side by finite differences.
/// id 2: F(p v) = i d_x F(v) with v = F^{-1} u, right side by finite differences.
/// id 3: P^k(Z~, F^{-1} u) = (-1)^k beta e^q d_p^k F^{-1} u for Z = beta Y, left side
///       assembled from the symbolic bidifferential expansion with finite differences.
HarnessResult fourier_identity_check(int id, const GridFunction& u, int k = 2, double beta = 1.0, double threshold = 1e-6);

/// F_p o l_Z o F_p^{-1} u against lhat_Z u applied directly. The star series
/// is truncated at `series_order`.
HarnessResult conjugation_check(const AlgElement& z, const GridFunction& u, int series_order = 96, double threshold = 1e-4);

}  // namespace orbitkit
