#include "orbitkit/nc_forms.hpp"

#include <sstream>

#include "orbitkit/errors.hpp"

namespace orbitkit {

std::vector<ScalarQ> FDAlgebra::multiply(const std::vector<ScalarQ>& a, const std::vector<ScalarQ>& b) const {
  const int n = dim();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n) fail(ErrorKind::Mismatch, "element length does not match algebra dimension");
  std::vector<ScalarQ> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[static_cast<std::size_t>(j)].is_zero()) continue;
      ScalarQ c = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      const auto& t = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] += c * t[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

namespace {

std::vector<ScalarQ> unit_vector(int n, int i) {
  std::vector<ScalarQ> v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace

bool FDAlgebra::is_associative() const {
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek))) return false;
      }
  return true;
}

bool FDAlgebra::unit_laws_hold() const {
  const int n = dim();
  for (int i = 0; i < n; ++i) {
    auto ei = unit_vector(n, i);
    if (multiply(unit, ei) != ei || multiply(ei, unit) != ei) return false;
  }
  return true;
}

namespace {

FDAlgebra zero_algebra(std::string name, std::vector<std::string> labels) {
  FDAlgebra a;
  a.name = std::move(name);
  a.labels = std::move(labels);
  auto n = a.labels.size();
  a.mult.assign(n, std::vector<std::vector<ScalarQ>>(n, std::vector<ScalarQ>(n)));
  a.unit.assign(n, ScalarQ());
  return a;
}

}  // namespace

FDAlgebra algebra_c() {
  FDAlgebra a = zero_algebra("c", {"1"});
  a.mult[0][0][0] = 1;
  a.unit[0] = 1;
  return a;
}

FDAlgebra algebra_c2() {
  FDAlgebra a = zero_algebra("c2", {"e1", "e2"});
  a.mult[0][0][0] = 1;
  a.mult[1][1][1] = 1;
  a.unit = {1, 1};
  return a;
}

FDAlgebra algebra_m2() {
  // E_ij E_kl = delta_jk E_il, basis order E11, E12, E21, E22.
  FDAlgebra a = zero_algebra("m2", {"E11", "E12", "E21", "E22"});
  auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) a.mult[idx(i, j)][idx(j, l)][idx(i, l)] = 1;
  a.unit[idx(0, 0)] = 1;
  a.unit[idx(1, 1)] = 1;
  return a;
}

FDAlgebra builtin_fd_algebra(const std::string& name) {
  if (name == "c") return algebra_c();
  if (name == "c2") return algebra_c2();
  if (name == "m2") return algebra_m2();
  fail(ErrorKind::InvalidInput, "unknown algebra '" + name + "' (expected c, c2, m2)");
}

int form_degree(const Word& w) { return static_cast<int>(w.size()) - 1; }

void form_add(NCForm& acc, const NCForm& f, const ScalarQ& scale) {
  if (scale.is_zero()) return;
  for (const auto& [w, c] : f) {
    auto& slot = acc[w];
    slot += c * scale;
    if (slot.is_zero()) acc.erase(w);
  }
}

NCForm form_scaled(const NCForm& f, const ScalarQ& s) {
  NCForm r;
  form_add(r, f, s);
  return r;
}

NCForm form_component(const NCForm& f, int degree) {
  NCForm r;
  for (const auto& [w, c] : f)
    if (form_degree(w) == degree) r.emplace(w, c);
  return r;
}

NCForm form_truncate(const NCForm& f, int max_degree) {
  NCForm r;
  for (const auto& [w, c] : f)
    if (form_degree(w) <= max_degree) r.emplace(w, c);
  return r;
}

int form_max_degree(const NCForm& f) {
  int d = -1;
  for (const auto& kv : f) d = std::max(d, form_degree(kv.first));
  return d;
}

namespace {

void add_term(NCForm& out, Word w, const ScalarQ& c) {
  if (c.is_zero()) return;
  auto& slot = out[std::move(w)];
  slot += c;
}

void prune(NCForm& f) {
  std::erase_if(f, [](const auto& kv) { return kv.second.is_zero(); });
}

// Gauss-Jordan inverse of a small dense matrix.
std::vector<std::vector<ScalarQ>> invert(std::vector<std::vector<ScalarQ>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<ScalarQ>> inv(n, std::vector<ScalarQ>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) fail(ErrorKind::InvalidInput, "singular change of basis");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    ScalarQ s = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      ScalarQ f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

FormSpace::FormSpace(FDAlgebra alg, int cap) : alg_(std::move(alg)), cap_(cap), m_(alg_.dim()) {
  if (m_ < 1) fail(ErrorKind::InvalidInput, "algebra must have positive dimension");
  if (cap_ < 0) fail(ErrorKind::InvalidInput, "cap must be >= 0");
  for (const auto& row : alg_.mult) {
    if (static_cast<int>(row.size()) != m_) fail(ErrorKind::InvalidInput, "multiplication table has wrong shape");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != m_) fail(ErrorKind::InvalidInput, "multiplication table has wrong shape");
  }
  if (static_cast<int>(alg_.unit.size()) != m_) fail(ErrorKind::InvalidInput, "unit has wrong length");
  if (!alg_.is_associative()) fail(ErrorKind::InvalidInput, "multiplication is not associative");
  if (!alg_.unit_laws_hold()) fail(ErrorKind::InvalidInput, "unit laws fail");

  // Adapted basis: the unit, then standard vectors completing it to a basis.
  std::vector<std::vector<ScalarQ>> cols{alg_.unit};
  std::vector<int> chosen{-1};
  for (int i = 0; i < m_ && static_cast<int>(cols.size()) < m_; ++i) {
    auto trial = cols;
    trial.push_back(unit_vector(m_, i));
    // Independence via the rank of the first |trial| columns padded to square.
    std::vector<std::vector<ScalarQ>> rows(static_cast<std::size_t>(m_), std::vector<ScalarQ>(trial.size()));
    for (std::size_t c = 0; c < trial.size(); ++c)
      for (int r = 0; r < m_; ++r) rows[static_cast<std::size_t>(r)][c] = trial[c][static_cast<std::size_t>(r)];
    // Row reduce to count rank.
    std::size_t rank = 0;
    for (std::size_t c = 0; c < trial.size() && rank < rows.size(); ++c) {
      std::size_t p = rank;
      while (p < rows.size() && rows[p][c].is_zero()) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][c].is_zero()) continue;
        ScalarQ f = rows[r][c] / rows[rank][c];
        for (std::size_t j = c; j < trial.size(); ++j) rows[r][j] -= f * rows[rank][j];
      }
      ++rank;
    }
    if (rank == trial.size()) {
      cols = std::move(trial);
      chosen.push_back(i);
    }
  }
  std::vector<std::vector<ScalarQ>> p(static_cast<std::size_t>(m_), std::vector<ScalarQ>(static_cast<std::size_t>(m_)));
  for (int c = 0; c < m_; ++c)
    for (int r = 0; r < m_; ++r) p[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  from_adapted_ = p;
  to_adapted_ = invert(p);
  labels_adapted_.clear();
  for (int i : chosen) labels_adapted_.push_back(i < 0 ? "1" : alg_.labels[static_cast<std::size_t>(i)]);

  table_.resize(static_cast<std::size_t>(m_ * m_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) table_[static_cast<std::size_t>(i * m_ + j)] = to_adapted(alg_.multiply(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]));
}

long FormSpace::dimension(int degree) const {
  long d = m_;
  for (int k = 0; k < degree; ++k) d *= (m_ - 1);
  return d;
}

std::vector<ScalarQ> FormSpace::to_adapted(const std::vector<ScalarQ>& v) const {
  if (static_cast<int>(v.size()) != m_) fail(ErrorKind::Mismatch, "element length does not match algebra dimension");
  std::vector<ScalarQ> out(static_cast<std::size_t>(m_));
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c < m_; ++c) out[static_cast<std::size_t>(r)] += to_adapted_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
  return out;
}

std::vector<ScalarQ> FormSpace::from_adapted(const std::vector<ScalarQ>& v) const {
  std::vector<ScalarQ> out(static_cast<std::size_t>(m_));
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c < m_; ++c) out[static_cast<std::size_t>(r)] += from_adapted_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
  return out;
}

std::string FormSpace::adapted_label(int k) const { return labels_adapted_.at(static_cast<std::size_t>(k)); }

NCForm FormSpace::element(const std::vector<ScalarQ>& v) const {
  auto a = to_adapted(v);
  NCForm f;
  for (int k = 0; k < m_; ++k)
    if (!a[static_cast<std::size_t>(k)].is_zero()) f[{k}] = a[static_cast<std::size_t>(k)];
  return f;
}

std::vector<ScalarQ> FormSpace::degree0(const NCForm& f) const {
  std::vector<ScalarQ> a(static_cast<std::size_t>(m_));
  for (const auto& [w, c] : f)
    if (w.size() == 1) a[static_cast<std::size_t>(w[0])] += c;
  return from_adapted(a);
}

void FormSpace::check_degree(int degree, const char* op) const {
  if (degree > cap_)
    fail(ErrorKind::CapExceeded, std::string(op) + ": degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap_));
}

NCForm FormSpace::d(const NCForm& f) const {
  NCForm out;
  for (const auto& [w, c] : f) {
    check_degree(form_degree(w) + 1, "d");
    if (w[0] == 0) continue;
    Word nw;
    nw.reserve(w.size() + 1);
    nw.push_back(0);
    nw.insert(nw.end(), w.begin(), w.end());
    add_term(out, std::move(nw), c);
  }
  prune(out);
  return out;
}

void FormSpace::right_mult(const Word& w, int a, const ScalarQ& c, NCForm& out) const {
  if (a == 0) {
    add_term(out, w, c);
    return;
  }
  const std::size_t n = w.size() - 1;
  if (n == 0) {
    const auto& p = mul(w[0], a);
    for (int k = 0; k < m_; ++k) add_term(out, {k}, c * p[static_cast<std::size_t>(k)]);
    return;
  }
  // (w' da_n) a = w' d(a_n a) - (w' a_n) da
  Word head(w.begin(), w.end() - 1);
  const auto& p = mul(w[n], a);
  for (int k = 1; k < m_; ++k) {
    if (p[static_cast<std::size_t>(k)].is_zero()) continue;
    Word nw = head;
    nw.push_back(k);
    add_term(out, std::move(nw), c * p[static_cast<std::size_t>(k)]);
  }
  NCForm tmp;
  right_mult(head, w[n], ScalarQ(1), tmp);
  for (auto& [u, cu] : tmp) {
    if (cu.is_zero()) continue;
    Word nw = u;
    nw.push_back(a);
    add_term(out, std::move(nw), -(c * cu));
  }
}

void FormSpace::left_mult_d(int a, const Word& w, const ScalarQ& c, NCForm& out) const {
  // da (a0 da1...dan) = d(a a0) da1...dan - a da0 da1...dan
  const auto& p = mul(a, w[0]);
  for (int k = 1; k < m_; ++k) {
    if (p[static_cast<std::size_t>(k)].is_zero()) continue;
    Word nw{0, k};
    nw.insert(nw.end(), w.begin() + 1, w.end());
    add_term(out, std::move(nw), c * p[static_cast<std::size_t>(k)]);
  }
  if (w[0] != 0) {
    Word nw{a};
    nw.insert(nw.end(), w.begin(), w.end());
    add_term(out, std::move(nw), -c);
  }
}

NCForm FormSpace::b(const NCForm& f) const {
  NCForm out;
  for (const auto& [w, c] : f) {
    const int n = form_degree(w);
    check_degree(n, "b");
    if (n == 0) continue;
    ScalarQ s = (n - 1) % 2 ? -c : c;
    Word head(w.begin(), w.end() - 1);
    const int a = w.back();
    // (-1)^{n-1} (w' a - a w')
    right_mult(head, a, s, out);
    const auto& p = mul(a, head[0]);
    for (int k = 0; k < m_; ++k) {
      if (p[static_cast<std::size_t>(k)].is_zero()) continue;
      Word nw = head;
      nw[0] = k;
      add_term(out, std::move(nw), -(s * p[static_cast<std::size_t>(k)]));
    }
  }
  prune(out);
  return out;
}

NCForm FormSpace::kappa(const NCForm& f) const {
  NCForm out;
  for (const auto& [w, c] : f) {
    const int n = form_degree(w);
    check_degree(n, "kappa");
    if (n == 0) {
      add_term(out, w, c);
      continue;
    }
    Word head(w.begin(), w.end() - 1);
    left_mult_d(w.back(), head, (n - 1) % 2 ? -c : c, out);
  }
  prune(out);
  return out;
}

NCForm FormSpace::kappa_power(const NCForm& f, int j) const {
  NCForm r = f;
  for (int k = 0; k < j; ++k) r = kappa(r);
  return r;
}

NCForm FormSpace::connes_B(const NCForm& f) const {
  NCForm out;
  for (int n = 0; n <= form_max_degree(f); ++n) {
    NCForm comp = form_component(f, n);
    if (comp.empty()) continue;
    NCForm t = d(comp);
    for (int j = 0; j <= n; ++j) {
      form_add(out, t);
      if (j < n) t = kappa(t);
    }
  }
  return out;
}

NCForm FormSpace::product(const NCForm& x, const NCForm& y) const {
  NCForm out;
  for (const auto& [wy, cy] : y) {
    const int dy = form_degree(wy);
    for (const auto& [wx, cx] : x) {
      if (form_degree(wx) + dy > cap_) continue;
      NCForm tmp;
      right_mult(wx, wy[0], cx * cy, tmp);
      for (auto& [u, cu] : tmp) {
        Word nw = u;
        nw.insert(nw.end(), wy.begin() + 1, wy.end());
        add_term(out, std::move(nw), cu);
      }
    }
  }
  prune(out);
  return out;
}

NCForm FormSpace::fedosov(const NCForm& x, const NCForm& y) const {
  NCForm out = product(x, y);
  // Sign (-1)^{|x|} is taken per homogeneous component of x.
  for (int n = 0; n <= form_max_degree(x); ++n) {
    NCForm xn = form_component(x, n);
    if (xn.empty()) continue;
    NCForm dx, dyv;
    // d without the cap check: components beyond cap are dropped by product anyway.
    for (const auto& [w, c] : xn) {
      if (w[0] == 0 || form_degree(w) + 1 > cap_) continue;
      Word nw{0};
      nw.insert(nw.end(), w.begin(), w.end());
      dx[nw] += c;
    }
    for (const auto& [w, c] : y) {
      if (w[0] == 0 || form_degree(w) + 1 > cap_) continue;
      Word nw{0};
      nw.insert(nw.end(), w.begin(), w.end());
      dyv[nw] += c;
    }
    form_add(out, product(dx, dyv), n % 2 ? ScalarQ(1) : ScalarQ(-1));
  }
  return out;
}

std::vector<Word> FormSpace::basis(int degree) const {
  std::vector<Word> out;
  if (degree < 0) return out;
  if (m_ == 1 && degree > 0) return out;
  Word w(static_cast<std::size_t>(degree + 1), 1);
  w[0] = 0;
  while (true) {
    out.push_back(w);
    std::size_t k = 0;
    while (k < w.size()) {
      if (w[k] < m_ - 1) {
        ++w[k];
        break;
      }
      w[k] = k == 0 ? 0 : 1;
      ++k;
    }
    if (k == w.size()) break;
  }
  return out;
}

long FormSpace::word_index(const Word& w) const {
  long idx = w[0];
  long stride = m_;
  for (std::size_t k = 1; k < w.size(); ++k) {
    idx += stride * (w[k] - 1);
    stride *= (m_ - 1);
  }
  return idx;
}

std::string FormSpace::str(const NCForm& f) const {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : f) {
    if (!first) os << " + ";
    first = false;
    bool unit_head = w[0] == 0;
    if (!c.is_one() || (unit_head && w.size() == 1)) os << "(" << c.str() << ")";
    if (!unit_head) os << adapted_label(w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) os << " d" << adapted_label(w[k]);
  }
  return os.str();
}

}  // namespace orbitkit
