#include "orbitkit/laurent.hpp"

#include <sstream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

Laurent::Laurent(const ScalarQ& c, int exponent) {
  if (!c.is_zero()) terms_.emplace(exponent, c);
}

ScalarQ Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? ScalarQ() : it->second;
}

Laurent Laurent::derivative() const {
  Laurent r;
  for (const auto& [k, c] : terms_)
    if (k != 0) r.terms_.emplace(k - 1, c * ScalarQ(k));
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot += c;
    if (slot.is_zero()) terms_.erase(k);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) {
    auto& slot = terms_[k];
    slot -= c;
    if (slot.is_zero()) terms_.erase(k);
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r += Laurent(ca * cb, ka + kb);
  return r;
}

Laurent operator*(const Laurent& a, const ScalarQ& s) {
  Laurent r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, c * s);
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (it->first != 0) os << "t^" << it->first;
  }
  return os.str();
}

namespace {

void check_square(const LaurentMatrix& g) {
  if (g.empty()) fail(ErrorKind::InvalidInput, "matrix is empty");
  for (const auto& row : g)
    if (row.size() != g.size()) fail(ErrorKind::InvalidInput, "matrix is not square");
  if (g.size() > 16) fail(ErrorKind::InvalidInput, "matrix dimension above 16 is not supported");
}

// Determinant of the submatrix with the given rows (in order) and all columns in `cols` mask.
Laurent det_rows_cols(const LaurentMatrix& g, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return Laurent(ScalarQ(1));
  // f[S] = signed sum over assignments of the first |S| rows onto column set S.
  std::vector<Laurent> f(std::size_t{1} << n);
  f[0] = Laurent(ScalarQ(1));
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (f[s].is_zero()) continue;
    std::size_t r = static_cast<std::size_t>(__builtin_popcountll(s));
    if (r == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (s & (std::size_t{1} << c)) continue;
      const Laurent& entry = g[rows[r]][cols[c]];
      if (entry.is_zero()) continue;
      // Sign: parity of already used columns to the right of c.
      int above = __builtin_popcountll(s >> (c + 1));
      Laurent term = f[s] * entry;
      if (above % 2) f[s | (std::size_t{1} << c)] -= term;
      else f[s | (std::size_t{1} << c)] += term;
    }
  }
  return f.back();
}

}  // namespace

Laurent determinant(const LaurentMatrix& g) {
  check_square(g);
  std::vector<std::size_t> idx(g.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return det_rows_cols(g, idx, idx);
}

LaurentMatrix adjugate(const LaurentMatrix& g) {
  check_square(g);
  const std::size_t n = g.size();
  LaurentMatrix adj(n, std::vector<Laurent>(n));
  if (n == 1) {
    adj[0][0] = Laurent(ScalarQ(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      Laurent minor = det_rows_cols(g, rows, cols);
      adj[j][i] = (i + j) % 2 ? minor * ScalarQ(-1) : minor;
    }
  return adj;
}

LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b) {
  check_square(a);
  check_square(b);
  if (a.size() != b.size()) fail(ErrorKind::Mismatch, "matrix sizes differ");
  const std::size_t n = a.size();
  LaurentMatrix r(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

LaurentMatrix identity_matrix(std::size_t n) {
  LaurentMatrix r(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = Laurent(ScalarQ(1));
  return r;
}

long chern1_winding(const LaurentMatrix& g) {
  Laurent det = determinant(g);
  if (!det.is_monomial()) fail(ErrorKind::Precondition, "matrix is not invertible over Laurent polynomials (det = " + det.str() + ")");
  const auto& [k, c] = *det.terms().begin();
  LaurentMatrix adj = adjugate(g);
  Laurent tr;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) tr += adj[i][j] * g[j][i].derivative();
  // g^{-1} = adj / (c t^k)
  Laurent quotient = tr.shifted(-k) * c.inverse();
  ScalarQ res = quotient.coeff(-1);
  if (!res.is_real() || res.re().get_den() != 1) fail(ErrorKind::Precondition, "residue is not an integer: " + res.str());
  return res.re().get_num().get_si();
}

}  // namespace orbitkit
