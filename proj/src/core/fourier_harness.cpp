#include "orbitkit/fourier_harness.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "orbitkit/coadjoint.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/starprod.hpp"

namespace orbitkit {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Batched in-place complex DFT: `howmany` transforms of length `len`, element
// stride `stride`, batch distance `dist`. sign = FFTW_FORWARD or FFTW_BACKWARD.
void batched_dft(std::vector<cplx>& data, int len, int howmany, int stride, int dist, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_many_dft(1, &len, howmany, ptr, nullptr, stride, dist, ptr, nullptr, stride, dist, sign, FFTW_ESTIMATE);
  }
  if (!plan) fail(ErrorKind::Precondition, "FFT planning failed");
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan);
}

void fast_axis_dft(std::vector<cplx>& data, const GridSpec& s, int sign) { batched_dft(data, s.n, s.nq, 1, s.n, sign); }
void q_axis_dft(std::vector<cplx>& data, const GridSpec& s, int sign) { batched_dft(data, s.nq, s.n, s.n, 1, sign); }

double parity(long k) { return (k & 1) ? -1.0 : 1.0; }

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// Angular wavenumber of DFT index m on a periodic grid of len points spaced h.
double wavenumber(int m, int len, double h) {
  int mm = m < len / 2 ? m : m - len;
  return 2.0 * std::numbers::pi * mm / (len * h);
}

void apply_spectral(std::vector<cplx>& data, int len, double h, int order, bool fast, const GridSpec& s) {
  if (order == 0) return;
  if (fast) fast_axis_dft(data, s, FFTW_FORWARD);
  else q_axis_dft(data, s, FFTW_FORWARD);
  std::vector<cplx> mult(static_cast<std::size_t>(len));
  for (int m = 0; m < len; ++m) {
    if (order % 2 == 1 && m == len / 2) {
      mult[static_cast<std::size_t>(m)] = 0.0;
      continue;
    }
    mult[static_cast<std::size_t>(m)] = std::pow(cplx(0.0, wavenumber(m, len, h)), order) / static_cast<double>(len);
  }
  for (int iq = 0; iq < s.nq; ++iq)
    for (int k = 0; k < s.n; ++k)
      data[static_cast<std::size_t>(iq) * static_cast<std::size_t>(s.n) + static_cast<std::size_t>(k)] *=
          mult[static_cast<std::size_t>(fast ? k : iq)];
  if (fast) fast_axis_dft(data, s, FFTW_BACKWARD);
  else q_axis_dft(data, s, FFTW_BACKWARD);
}

// 8th-order central first-derivative weights for offsets 1..4.
constexpr double kFd[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};

std::vector<cplx> fd_once(const std::vector<cplx>& f, const GridSpec& s, bool fast) {
  std::vector<cplx> out(f.size());
  const int n = s.n, nq = s.nq;
  for (int iq = 0; iq < nq; ++iq) {
    for (int k = 0; k < n; ++k) {
      cplx acc = 0.0;
      for (int m = 1; m <= 4; ++m) {
        int kp = k, km = k, qp = iq, qm = iq;
        if (fast) {
          kp = (k + m) % n;
          km = (k - m + n) % n;
        } else {
          qp = (iq + m) % nq;
          qm = (iq - m + nq) % nq;
        }
        acc += kFd[m - 1] * (f[static_cast<std::size_t>(qp) * static_cast<std::size_t>(n) + static_cast<std::size_t>(kp)] -
                             f[static_cast<std::size_t>(qm) * static_cast<std::size_t>(n) + static_cast<std::size_t>(km)]);
      }
      out[static_cast<std::size_t>(iq) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] = acc;
    }
  }
  return out;
}

double fast_spacing(const GridFunction& f) { return f.domain == Domain::PQ ? f.spec.hp() : f.spec.hx(); }

HarnessResult finish(std::string name, double residual, double threshold, std::string note = {}) {
  return {std::move(name), residual, threshold, residual <= threshold, std::move(note)};
}

void require_domain(const GridFunction& f, Domain d, const char* what) {
  if (f.domain != d) fail(ErrorKind::InvalidInput, std::string(what) + ": grid function is on the wrong domain");
}

}  // namespace

void GridSpec::validate() const {
  if (!is_pow2(n) || !is_pow2(nq) || n < 16 || nq < 16)
    fail(ErrorKind::InvalidInput, "grid resolution must be a power of two >= 16 (got " + std::to_string(n) + " x " + std::to_string(nq) + ")");
  if (!(L > 0) || !(Lq > 0)) fail(ErrorKind::InvalidInput, "grid extents must be positive");
}

double GridSpec::hx() const { return std::numbers::pi / L; }

GridFunction::GridFunction(GridSpec s, Domain d) : spec(s), domain(d) {
  spec.validate();
  data.assign(static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(spec.nq), cplx(0.0));
}

double GridFunction::l2_norm() const {
  double acc = 0.0;
  for (const auto& v : data) acc += std::norm(v);
  double cell = (domain == Domain::PQ ? spec.hp() : spec.hx()) * spec.hq();
  return std::sqrt(acc * cell);
}

GridFunction gaussian(const GridSpec& spec, Domain domain, double center, double width, double q_center) {
  GridFunction g(spec, domain);
  for (int iq = 0; iq < spec.nq; ++iq) {
    double dq = spec.q(iq) - q_center;
    for (int k = 0; k < spec.n; ++k) {
      double d = (g.fast_coord(k) - center) / width;
      g.at(iq, k) = std::exp(-0.5 * (d * d + dq * dq));
    }
  }
  return g;
}

GridFunction fourier_inverse_p(const GridFunction& u) {
  require_domain(u, Domain::XQ, "inverse partial Fourier transform");
  const auto& s = u.spec;
  GridFunction v(s, Domain::PQ);
  v.data = u.data;
  for (int iq = 0; iq < s.nq; ++iq)
    for (int k = 0; k < s.n; ++k) v.at(iq, k) *= parity(k);
  fast_axis_dft(v.data, s, FFTW_BACKWARD);
  double scale = s.hx() * kInvSqrt2Pi * parity(s.n / 2);
  for (int iq = 0; iq < s.nq; ++iq)
    for (int j = 0; j < s.n; ++j) v.at(iq, j) *= scale * parity(j);
  return v;
}

GridFunction fourier_p(const GridFunction& v) {
  require_domain(v, Domain::PQ, "partial Fourier transform");
  const auto& s = v.spec;
  GridFunction u(s, Domain::XQ);
  u.data = v.data;
  for (int iq = 0; iq < s.nq; ++iq)
    for (int j = 0; j < s.n; ++j) u.at(iq, j) *= parity(j);
  fast_axis_dft(u.data, s, FFTW_FORWARD);
  double scale = s.hp() * kInvSqrt2Pi * parity(s.n / 2);
  for (int iq = 0; iq < s.nq; ++iq)
    for (int k = 0; k < s.n; ++k) u.at(iq, k) *= scale * parity(k);
  return u;
}

GridFunction spectral_d_fast(const GridFunction& f, int order) {
  GridFunction out = f;
  apply_spectral(out.data, f.spec.n, fast_spacing(f), order, true, f.spec);
  return out;
}

GridFunction spectral_dq(const GridFunction& f, int order) {
  GridFunction out = f;
  apply_spectral(out.data, f.spec.nq, f.spec.hq(), order, false, f.spec);
  return out;
}

GridFunction fd_d_fast(const GridFunction& f, int order) {
  GridFunction out = f;
  double h = fast_spacing(f);
  for (int k = 0; k < order; ++k) {
    out.data = fd_once(out.data, f.spec, true);
    for (auto& v : out.data) v /= h;
  }
  return out;
}

GridFunction fd_dq(const GridFunction& f, int order) {
  GridFunction out = f;
  double h = f.spec.hq();
  for (int k = 0; k < order; ++k) {
    out.data = fd_once(out.data, f.spec, false);
    for (auto& v : out.data) v /= h;
  }
  return out;
}

double relative_l2(const GridFunction& value, const GridFunction& reference) {
  if (value.data.size() != reference.data.size()) fail(ErrorKind::InvalidInput, "grid functions of different sizes");
  double diff = 0.0, ref = 0.0;
  for (std::size_t k = 0; k < value.data.size(); ++k) {
    diff += std::norm(value.data[k] - reference.data[k]);
    ref += std::norm(reference.data[k]);
  }
  if (ref == 0.0) return diff == 0.0 ? 0.0 : std::sqrt(diff);
  return std::sqrt(diff / ref);
}

namespace {

// Evaluates a Symbol on the (p, q) chart at every grid point.
GridFunction sample_symbol(const Symbol& sym, const GridSpec& s) {
  GridFunction g(s, Domain::PQ);
  for (int iq = 0; iq < s.nq; ++iq)
    for (int j = 0; j < s.n; ++j) g.at(iq, j) = sym.evaluate({cplx(s.p(j)), cplx(s.q(iq))});
  return g;
}

GridFunction multiply_by_fast_coord(const GridFunction& f, int power) {
  GridFunction out = f;
  for (int iq = 0; iq < f.spec.nq; ++iq)
    for (int k = 0; k < f.spec.n; ++k) out.at(iq, k) *= std::pow(f.fast_coord(k), power);
  return out;
}

}  // namespace

HarnessResult fourier_identity_check(int id, const GridFunction& u, int k, double beta, double threshold) {
  require_domain(u, Domain::XQ, "fourier_identity_check");
  const auto& s = u.spec;
  const cplx i(0.0, 1.0);
  switch (id) {
    case 1: {
      GridFunction lhs = fd_d_fast(fourier_inverse_p(u), 1);
      GridFunction rhs = fourier_inverse_p(multiply_by_fast_coord(u, 1));
      for (auto& v : rhs.data) v *= i;
      return finish("d_p F^-1(u) = i F^-1(x u)", relative_l2(lhs, rhs), threshold);
    }
    case 2: {
      GridFunction v = fourier_inverse_p(u);
      GridFunction lhs = fourier_p(multiply_by_fast_coord(v, 1));
      GridFunction rhs = fd_d_fast(fourier_p(v), 1);
      for (auto& w : rhs.data) w *= i;
      return finish("F(p v) = i d_x F(v)", relative_l2(lhs, rhs), threshold);
    }
    case 3: {
      if (k < 2) fail(ErrorKind::InvalidInput, "identity 3 needs k >= 2");
      GridFunction v = fourier_inverse_p(u);
      // Left side: sum over the bidifferential expansion of P^k(Z~, v), Z~ = beta e^q.
      auto ch = chart_affr();
      Symbol zt = Symbol::exponential(ch, "q", Rational(1)) * ScalarQ(1);
      GridFunction lhs(s, Domain::PQ);
      for (const auto& t : bidifferential_terms(k, ch->lambda)) {
        Symbol coeff = zt;
        for (std::size_t var = 0; var < t.du.size(); ++var)
          if (t.du[var] > 0) coeff = coeff.derivative(static_cast<int>(var), t.du[var]);
        if (coeff.is_zero()) continue;
        GridFunction dv = fd_dq(fd_d_fast(v, t.dv[0]), t.dv[1]);
        GridFunction c = sample_symbol(coeff, s);
        double w = t.coeff.get_d() * beta;
        for (std::size_t m = 0; m < lhs.data.size(); ++m) lhs.data[m] += w * c.data[m] * dv.data[m];
      }
      // Right side: (-1)^k beta e^q F^{-1}((ix)^k u).
      GridFunction xu = u;
      for (int iq = 0; iq < s.nq; ++iq)
        for (int kk = 0; kk < s.n; ++kk) xu.at(iq, kk) *= std::pow(cplx(0.0, s.x(kk)), k);
      GridFunction rhs = fourier_inverse_p(xu);
      for (int iq = 0; iq < s.nq; ++iq)
        for (int j = 0; j < s.n; ++j) rhs.at(iq, j) *= parity(k) * beta * std::exp(s.q(iq));
      return finish("P^k(Z~, v) = (-1)^k beta e^q d_p^k v", relative_l2(lhs, rhs), threshold);
    }
    default:
      fail(ErrorKind::InvalidInput, "unknown identity id " + std::to_string(id) + " (expected 1, 2 or 3)");
  }
}

HarnessResult conjugation_check(const AlgElement& z, const GridFunction& u, int series_order, double threshold) {
  require_domain(u, Domain::XQ, "conjugation_check");
  if (!(*z.algebra() == *aff_r())) fail(ErrorKind::InvalidInput, "conjugation_check needs an element of affR");
  if (!z[0].is_real() || !z[1].is_real()) fail(ErrorKind::Precondition, "coordinates must be real");
  if (series_order < 0) fail(ErrorKind::InvalidInput, "series order must be >= 0");
  const auto& s = u.spec;
  const double alpha = z[0].re().get_d(), beta = z[1].re().get_d();
  const cplx i(0.0, 1.0);

  // l_Z v = i sum_r w_r P^r(Z~, v), w_r = (1/r!)(1/(2i))^r. Each bidifferential
  // summand is (d^du Z~)(d_p^a d_q^b v); group by (d^du Z~, b) and collect the
  // p-derivative orders as a polynomial multiplier in (ix) on the x side.
  Symbol zt = hamiltonian_affR(z);
  struct Group {
    Symbol coeff;
    int qorder;
    std::vector<cplx> poly;  // coefficient of (ix)^a
  };
  std::map<std::pair<std::string, int>, Group> groups;
  const ScalarQ step = (ScalarQ(2) * ScalarQ::i()).inverse();
  ScalarQ w(1);
  for (int r = 0; r <= series_order; ++r) {
    if (r > 0) w *= step * ScalarQ(Rational(1, r));
    for (const auto& t : bidifferential_terms(r, zt.chart()->lambda)) {
      Symbol coeff = zt;
      for (std::size_t var = 0; var < t.du.size() && !coeff.is_zero(); ++var)
        if (t.du[var] > 0) coeff = coeff.derivative(static_cast<int>(var), t.du[var]);
      if (coeff.is_zero()) continue;
      // Normalise so that equal shapes share a group; the scale moves into the weight.
      ScalarQ lead = coeff.terms().begin()->second;
      Symbol shape = coeff * lead.inverse();
      auto key = std::make_pair(shape.str(), t.dv[1]);
      auto it = groups.find(key);
      if (it == groups.end()) it = groups.emplace(key, Group{shape, t.dv[1], {}}).first;
      auto& poly = it->second.poly;
      auto a = static_cast<std::size_t>(t.dv[0]);
      if (poly.size() <= a) poly.resize(a + 1, 0.0);
      poly[a] += (w * ScalarQ(t.coeff) * lead).to_complex();
    }
  }

  GridFunction ell_v(s, Domain::PQ);
  for (const auto& [key, g] : groups) {
    GridFunction du = spectral_dq(u, g.qorder);
    for (int iq = 0; iq < s.nq; ++iq) {
      for (int k = 0; k < s.n; ++k) {
        if (du.at(iq, k) == 0.0) continue;
        cplx ix(0.0, s.x(k)), m = 0.0;
        for (std::size_t a = g.poly.size(); a-- > 0;) m = m * ix + g.poly[a];
        du.at(iq, k) *= m;
      }
    }
    GridFunction term = fourier_inverse_p(du);
    GridFunction c = sample_symbol(g.coeff, s);
    for (std::size_t m = 0; m < term.data.size(); ++m) ell_v.data[m] += i * c.data[m] * term.data[m];
  }
  GridFunction conj = fourier_p(ell_v);

  // lhat_Z u = alpha (1/2 d_q - d_x) u + i beta e^{q - x/2} u, spectral derivatives.
  GridFunction direct(s, Domain::XQ);
  if (alpha != 0.0) {
    GridFunction dq = spectral_dq(u, 1), dx = spectral_d_fast(u, 1);
    for (std::size_t m = 0; m < direct.data.size(); ++m) direct.data[m] += alpha * (0.5 * dq.data[m] - dx.data[m]);
  }
  if (beta != 0.0) {
    for (int iq = 0; iq < s.nq; ++iq)
      for (int k = 0; k < s.n; ++k) {
        const cplx val = u.at(iq, k);
        if (val != 0.0) direct.at(iq, k) += i * beta * std::exp(s.q(iq) - 0.5 * s.x(k)) * val;
      }
  }
  std::string note = "star series truncated at order " + std::to_string(series_order);
  return finish("F o l_Z o F^-1 = lhat_Z", relative_l2(conj, direct), threshold, note);
}

}  // namespace orbitkit
