#include "orbitkit/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

LieAlgebraSpec::LieAlgebraSpec(std::string name, std::vector<std::string> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  c_.assign(static_cast<std::size_t>(dim() * dim() * dim()), ScalarQ());
}

void LieAlgebraSpec::set_bracket_raw(int i, int j, std::vector<ScalarQ> coeffs) {
  if (i < 0 || j < 0 || i >= dim() || j >= dim() || static_cast<int>(coeffs.size()) != dim())
    fail(ErrorKind::InvalidInput, "bracket entry out of range for algebra " + name_);
  for (int k = 0; k < dim(); ++k) c_[static_cast<std::size_t>((i * dim() + j) * dim() + k)] = coeffs[static_cast<std::size_t>(k)];
}

void LieAlgebraSpec::set_bracket(int i, int j, std::vector<ScalarQ> coeffs) {
  std::vector<ScalarQ> neg(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), neg.begin(), [](const ScalarQ& s) { return -s; });
  set_bracket_raw(i, j, std::move(coeffs));
  set_bracket_raw(j, i, std::move(neg));
}

int LieAlgebraSpec::index_of(const std::string& basis_name) const {
  auto it = std::find(basis_.begin(), basis_.end(), basis_name);
  if (it == basis_.end()) fail(ErrorKind::InvalidInput, "no basis element '" + basis_name + "' in " + name_);
  return static_cast<int>(it - basis_.begin());
}

bool LieAlgebraSpec::is_antisymmetric() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        if (structure(i, j, k) != -structure(j, i, k)) return false;
  return true;
}

LieAlgebraPtr aff_r() {
  static const LieAlgebraPtr alg = [] {
    auto a = std::make_shared<LieAlgebraSpec>("affR", std::vector<std::string>{"X", "Y"});
    a->set_bracket(0, 1, {0, 1});
    return a;
  }();
  return alg;
}

LieAlgebraPtr aff_c() {
  static const LieAlgebraPtr alg = [] {
    auto a = std::make_shared<LieAlgebraSpec>("affC", std::vector<std::string>{"X1", "X2", "Y1", "Y2"});
    a->set_bracket(0, 2, {0, 0, 1, 0});   // [X1,Y1] = Y1
    a->set_bracket(0, 3, {0, 0, 0, 1});   // [X1,Y2] = Y2
    a->set_bracket(1, 2, {0, 0, 0, 1});   // [X2,Y1] = Y2
    a->set_bracket(1, 3, {0, 0, -1, 0});  // [X2,Y2] = -Y1
    return a;
  }();
  return alg;
}

LieAlgebraPtr builtin_algebra(const std::string& name) {
  if (name == "affR") return aff_r();
  if (name == "affC") return aff_c();
  fail(ErrorKind::InvalidInput, "unknown algebra '" + name + "' (expected affR or affC)");
}

AlgElement::AlgElement(LieAlgebraPtr algebra, std::vector<ScalarQ> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) fail(ErrorKind::InvalidInput, "null algebra");
  if (static_cast<int>(coords_.size()) != algebra_->dim())
    fail(ErrorKind::InvalidInput, "coordinate count does not match dimension of " + algebra_->name());
}

AlgElement AlgElement::zero(LieAlgebraPtr algebra) {
  auto n = static_cast<std::size_t>(algebra->dim());
  return {std::move(algebra), std::vector<ScalarQ>(n)};
}

AlgElement AlgElement::basis(LieAlgebraPtr algebra, int index) {
  std::vector<ScalarQ> c(static_cast<std::size_t>(algebra->dim()));
  c.at(static_cast<std::size_t>(index)) = 1;
  return {std::move(algebra), std::move(c)};
}

AlgElement AlgElement::basis(LieAlgebraPtr algebra, const std::string& name) {
  int idx = algebra->index_of(name);
  return basis(std::move(algebra), idx);
}

bool AlgElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const ScalarQ& s) { return s.is_zero(); });
}

namespace {
void require_same(const AlgElement& a, const AlgElement& b) {
  if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra()))
    fail(ErrorKind::Mismatch, "elements of different algebras: " + a.algebra()->name() + " vs " + b.algebra()->name());
}
}  // namespace

AlgElement AlgElement::operator+(const AlgElement& o) const {
  require_same(*this, o);
  auto c = coords_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.coords_[k];
  return {algebra_, std::move(c)};
}

AlgElement AlgElement::operator-(const AlgElement& o) const { return *this + o * ScalarQ(-1); }

AlgElement AlgElement::operator*(const ScalarQ& s) const {
  auto c = coords_;
  for (auto& x : c) x *= s;
  return {algebra_, std::move(c)};
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  return *a.algebra_ == *b.algebra_ && a.coords_ == b.coords_;
}

AlgElement bracket(const AlgElement& a, const AlgElement& b) {
  require_same(a, b);
  const auto& alg = *a.algebra();
  int n = alg.dim();
  std::vector<ScalarQ> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      ScalarQ ab = a[i] * b[j];
      for (int k = 0; k < n; ++k) {
        const auto& c = alg.structure(i, j, k);
        if (!c.is_zero()) out[static_cast<std::size_t>(k)] += ab * c;
      }
    }
  }
  return {a.algebra(), std::move(out)};
}

ScalarMatrix ad_matrix(const AlgElement& u) {
  int n = u.algebra()->dim();
  ScalarMatrix m(static_cast<std::size_t>(n), std::vector<ScalarQ>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    auto col = bracket(u, AlgElement::basis(u.algebra(), j));
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = col[k];
  }
  return m;
}

namespace {

template <class T>
std::vector<std::vector<T>> matmul(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b) {
  std::size_t n = a.size();
  std::vector<std::vector<T>> c(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

ScalarMatrix exp_neg_ad_series(const AlgElement& u, int terms) {
  if (terms < 1) fail(ErrorKind::Precondition, "series mode needs terms >= 1");
  auto m = ad_matrix(u);
  std::size_t n = m.size();
  for (auto& row : m)
    for (auto& x : row) x = -x;
  ScalarMatrix sum(n, std::vector<ScalarQ>(n));
  ScalarMatrix power(n, std::vector<ScalarQ>(n));
  for (std::size_t i = 0; i < n; ++i) sum[i][i] = power[i][i] = 1;
  for (int k = 1; k < terms; ++k) {
    power = matmul(power, m);
    ScalarQ inv_k(Rational(1, k));
    for (auto& row : power)
      for (auto& x : row) x *= inv_k;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += power[i][j];
  }
  return sum;
}

RealMatrix exp_neg_ad_series(const RealMatrix& neg_ad, int terms) {
  if (terms < 1) fail(ErrorKind::Precondition, "series mode needs terms >= 1");
  std::size_t n = neg_ad.size();
  RealMatrix sum(n, std::vector<double>(n, 0.0)), power = sum;
  for (std::size_t i = 0; i < n; ++i) sum[i][i] = power[i][i] = 1.0;
  for (int k = 1; k < terms; ++k) {
    power = matmul(power, neg_ad);
    for (auto& row : power)
      for (auto& x : row) x /= k;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] += power[i][j];
  }
  return sum;
}

ExpPoly::ExpPoly(const Rational& constant) { add_term(Rational(0), constant); }

ExpPoly ExpPoly::atom(const Rational& coeff, const Rational& exponent) {
  ExpPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void ExpPoly::add_term(const Rational& exponent, const Rational& coeff) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const auto& t, const Rational& e) { return cmp(t.first, e) < 0; });
  if (it != terms_.end() && it->first == exponent) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  } else if (sgn(coeff) != 0) {
    terms_.insert(it, {exponent, coeff});
  }
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
  ExpPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
  ExpPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(Rational(e1 + e2), Rational(c1 * c2));
  return r;
}

ExpPoly ExpPoly::scaled(const Rational& s) const {
  ExpPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e, Rational(c * s));
  return r;
}

double ExpPoly::evaluate() const {
  double v = 0.0;
  for (const auto& [e, c] : terms_) v += c.get_d() * std::exp(e.get_d());
  return v;
}

int ExpPoly::sign() const {
  if (terms_.empty()) return 0;
  bool all_pos = std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) > 0; });
  bool all_neg = std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) < 0; });
  if (all_pos) return 1;
  if (all_neg) return -1;
  double v = evaluate();
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::string ExpPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (sgn(e) == 0) {
      os << c.get_str();
    } else {
      os << c.get_str() << "*e^(" << e.get_str() << ")";
    }
  }
  return os.str();
}

RealMatrix AffRExpNegAd::evaluate() const {
  return {{top_left.evaluate(), top_right.evaluate()}, {bottom_left.evaluate(), bottom_right.evaluate()}};
}

AffRExpNegAd exp_neg_ad_affr(const Rational& alpha, const Rational& beta) {
  AffRExpNegAd m;
  m.top_left = ExpPoly(Rational(1));
  m.bottom_right = ExpPoly::atom(Rational(1), Rational(-alpha));
  if (sgn(alpha) == 0) {
    m.bottom_left = ExpPoly(beta);
  } else {
    Rational ratio = beta / alpha;
    m.bottom_left = ExpPoly(ratio) + ExpPoly::atom(Rational(-ratio), Rational(-alpha));
  }
  return m;
}

RealMatrix exp_neg_ad_affr(double alpha, double beta) {
  // L = beta (1 - e^{-alpha}) / alpha = -beta expm1(-alpha) / alpha.
  double L = alpha == 0.0 ? beta : -beta * std::expm1(-alpha) / alpha;
  return {{1.0, 0.0}, {L, std::exp(-alpha)}};
}

ExpNegAd exp_neg_ad(const AlgElement& u, int terms) {
  ExpNegAd out;
  const auto& alg = *u.algebra();
  if (alg == *aff_r() && u[0].is_real() && u[1].is_real()) {
    out.closed_form = true;
    out.affr = exp_neg_ad_affr(u[0].re(), u[1].re());
    out.numeric = out.affr.evaluate();
    return out;
  }
  out.series = exp_neg_ad_series(u, terms);
  for (const auto& row : out.series) {
    std::vector<double> r;
    for (const auto& x : row) {
      if (!x.is_real()) fail(ErrorKind::Precondition, "exp(-ad) has a non-real entry; numeric view undefined");
      r.push_back(x.re().get_d());
    }
    out.numeric.push_back(std::move(r));
  }
  return out;
}

bool jacobi_check(const LieAlgebraSpec& alg) {
  int n = alg.dim();
  // [e_i,[e_j,e_k]] = sum_m c_jk^m c_im^l e_l
  auto nested = [&](int i, int j, int k, int l) {
    ScalarQ s;
    for (int m = 0; m < n; ++m) {
      const auto& a = alg.structure(j, k, m);
      if (a.is_zero()) continue;
      s += a * alg.structure(i, m, l);
    }
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (!(nested(i, j, k, l) + nested(j, k, i, l) + nested(k, i, j, l)).is_zero()) return false;
  return true;
}

}  // namespace orbitkit
