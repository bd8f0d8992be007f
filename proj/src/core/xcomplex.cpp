#include "orbitkit/xcomplex.hpp"

#include "orbitkit/errors.hpp"

namespace orbitkit {

NCForm x_delta(const FormSpace& s, const NCForm& even, NBinding binding) {
  NCForm out = s.connes_B(even);
  for (int deg = 2; deg <= form_max_degree(even); deg += 2) {
    NCForm comp = form_component(even, deg);
    if (comp.empty()) continue;
    NCForm t = s.b(comp);
    int terms = binding == NBinding::HalfDegree ? deg / 2 : deg - 1;
    for (int j = 0; j < terms; ++j) {
      form_add(out, t, ScalarQ(-1));
      if (j + 1 < terms) t = s.kappa(s.kappa(t));
    }
  }
  for (const auto& [w, c] : even)
    if (form_degree(w) % 2) fail(ErrorKind::InvalidInput, "delta expects an even form");
  return out;
}

NCForm x_beta(const FormSpace& s, const NCForm& odd) {
  NCForm out;
  for (const auto& [w, c] : odd)
    if (form_degree(w) % 2 == 0) fail(ErrorKind::InvalidInput, "beta expects an odd form");
  out = s.b(odd);
  NCForm low;
  for (const auto& [w, c] : odd)
    if (form_degree(w) + 1 <= s.cap()) low.emplace(w, c);
  NCForm dw = s.d(low);
  form_add(out, dw, ScalarQ(-1));
  form_add(out, s.kappa(dw), ScalarQ(-1));
  return out;
}

namespace {

FormSpace checked_space(FDAlgebra alg, int adic, int cap) {
  if (adic < 0) fail(ErrorKind::InvalidInput, "adic order must be >= 0");
  if (cap < 2 * adic + 2)
    fail(ErrorKind::InvalidInput, "cap must be >= 2n + 2 (got cap " + std::to_string(cap) + ", n " + std::to_string(adic) + ")");
  return FormSpace(std::move(alg), 2 * adic + 2);
}

}  // namespace

XComplex::XComplex(FDAlgebra alg, int adic, int cap, NBinding binding)
    : space_(checked_space(std::move(alg), adic, cap)),
      n_(adic),
      binding_(binding),
      w_span_(0),
      beta_image_(0) {
  result_.adic = adic;
  result_.cap = cap;
  const int top = 2 * n_ + 1;
  even_offset_.assign(static_cast<std::size_t>(top + 2), 0);
  odd_offset_.assign(static_cast<std::size_t>(top + 2), 0);
  even_basis_.resize(static_cast<std::size_t>(top + 1));
  odd_basis_.resize(static_cast<std::size_t>(top + 1));
  // Highest degree first, so reductions keep representatives in low degree.
  for (int deg = top; deg >= 0; --deg) {
    auto& basis = deg % 2 ? odd_basis_[static_cast<std::size_t>(deg)] : even_basis_[static_cast<std::size_t>(deg)];
    basis = space_.basis(deg);
    long& total = deg % 2 ? odd_dim_ : even_dim_;
    (deg % 2 ? odd_offset_ : even_offset_)[static_cast<std::size_t>(deg)] = total;
    total += static_cast<long>(basis.size());
  }
  result_.even_dim = even_dim_;
  result_.odd_dim = odd_dim_;

  w_span_ = Echelon<ScalarQ>(static_cast<int>(odd_dim_));
  for (const auto& w : space_.basis(top + 1)) w_span_.insert(odd_vector(space_.b(NCForm{{w, ScalarQ(1)}})));
  result_.rank_w = w_span_.rank();

  std::vector<SparseVec<ScalarQ>> delta_cols, beta_cols;
  for (int deg = 0; deg <= top; deg += 2)
    for (const auto& w : even_basis_[static_cast<std::size_t>(deg)])
      delta_cols.push_back(odd_vector(x_delta(space_, NCForm{{w, ScalarQ(1)}}, binding_)));
  for (int deg = 1; deg <= top; deg += 2)
    for (const auto& w : odd_basis_[static_cast<std::size_t>(deg)])
      beta_cols.push_back(even_vector(form_truncate(x_beta(space_, NCForm{{w, ScalarQ(1)}}), 2 * n_)));

  Echelon<ScalarQ> delta_span = w_span_;
  for (const auto& c : delta_cols) delta_span.insert(c);
  result_.rank_delta = delta_span.rank() - result_.rank_w;

  beta_image_ = Echelon<ScalarQ>(static_cast<int>(even_dim_));
  for (const auto& c : beta_cols) beta_image_.insert(c);
  result_.rank_beta = beta_image_.rank();

  // Complex property through the matrices: columns are listed in increasing
  // degree, so map global indices back to the column list.
  auto even_col_of = [&](int idx) {
    // even_vector index -> position in delta_cols
    long pos = 0;
    for (int deg = 0; deg <= top; deg += 2) {
      long off = even_offset_[static_cast<std::size_t>(deg)];
      long sz = static_cast<long>(even_basis_[static_cast<std::size_t>(deg)].size());
      if (idx >= off && idx < off + sz) return pos + (idx - off);
      pos += sz;
    }
    return -1L;
  };
  auto odd_col_of = [&](int idx) {
    long pos = 0;
    for (int deg = 1; deg <= top; deg += 2) {
      long off = odd_offset_[static_cast<std::size_t>(deg)];
      long sz = static_cast<long>(odd_basis_[static_cast<std::size_t>(deg)].size());
      if (idx >= off && idx < off + sz) return pos + (idx - off);
      pos += sz;
    }
    return -1L;
  };
  bool bd = true;
  for (const auto& col : delta_cols) {
    SparseVec<ScalarQ> acc;
    for (const auto& [i, c] : col)
      for (const auto& [j, cc] : beta_cols[static_cast<std::size_t>(odd_col_of(i))]) acc.emplace_back(j, c * cc);
    normalize(acc);
    if (!acc.empty()) bd = false;
  }
  bool db = true;
  for (const auto& col : beta_cols) {
    SparseVec<ScalarQ> acc;
    for (const auto& [i, c] : col)
      for (const auto& [j, cc] : delta_cols[static_cast<std::size_t>(even_col_of(i))]) acc.emplace_back(j, c * cc);
    normalize(acc);
    if (!w_span_.contains(acc)) db = false;
  }
  result_.beta_delta_zero = bd;
  result_.delta_beta_zero = db;
  result_.h0 = even_dim_ - result_.rank_delta - result_.rank_beta;
  result_.h1 = (odd_dim_ - result_.rank_w) - result_.rank_beta - result_.rank_delta;
}

SparseVec<ScalarQ> XComplex::even_vector(const NCForm& f) const {
  SparseVec<ScalarQ> v;
  for (const auto& [w, c] : f) {
    int deg = form_degree(w);
    if (deg % 2 || deg > 2 * n_) fail(ErrorKind::InvalidInput, "form outside the even part of the truncated complex");
    v.emplace_back(static_cast<int>(even_offset_[static_cast<std::size_t>(deg)] + space_.word_index(w)), c);
  }
  normalize(v);
  return v;
}

SparseVec<ScalarQ> XComplex::odd_vector(const NCForm& f) const {
  SparseVec<ScalarQ> v;
  for (const auto& [w, c] : f) {
    int deg = form_degree(w);
    if (deg % 2 == 0 || deg > 2 * n_ + 1) fail(ErrorKind::InvalidInput, "form outside the odd part of the truncated complex");
    v.emplace_back(static_cast<int>(odd_offset_[static_cast<std::size_t>(deg)] + space_.word_index(w)), c);
  }
  normalize(v);
  return v;
}

NCForm XComplex::even_form(const SparseVec<ScalarQ>& v) const {
  NCForm f;
  for (const auto& [idx, c] : v) {
    for (int deg = 0; deg <= 2 * n_; deg += 2) {
      long off = even_offset_[static_cast<std::size_t>(deg)];
      const auto& basis = even_basis_[static_cast<std::size_t>(deg)];
      if (idx >= off && idx < off + static_cast<long>(basis.size())) {
        f[basis[static_cast<std::size_t>(idx - off)]] = c;
        break;
      }
    }
  }
  return f;
}

NCForm XComplex::reduce_even(const NCForm& f) const { return even_form(beta_image_.reduce_full(even_vector(f))); }

bool XComplex::is_boundary(const NCForm& even) const { return beta_image_.contains(even_vector(even)); }

bool XComplex::is_cycle(const NCForm& even) const {
  return w_span_.contains(odd_vector(form_truncate(x_delta(space_, even, binding_), 2 * n_ + 1)));
}

FormMatrix fedosov_matrix(const FormSpace& s, const FormMatrix& x, const FormMatrix& y) {
  const std::size_t k = x.size();
  if (y.size() != k) fail(ErrorKind::Mismatch, "matrix sizes differ");
  FormMatrix out(k, std::vector<NCForm>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) form_add(out[i][j], s.fedosov(x[i][l], y[l][j]));
  return out;
}

namespace {

using AlgMatrix = std::vector<std::vector<std::vector<ScalarQ>>>;

void check_square(const FDAlgebra& alg, const AlgMatrix& e) {
  const std::size_t k = e.size();
  if (k == 0) fail(ErrorKind::InvalidInput, "idempotent matrix is empty");
  for (const auto& row : e) {
    if (row.size() != k) fail(ErrorKind::InvalidInput, "idempotent matrix is not square");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != alg.dim()) fail(ErrorKind::InvalidInput, "matrix entry length does not match the algebra");
  }
}

bool is_idempotent(const FDAlgebra& alg, const AlgMatrix& e) {
  const std::size_t k = e.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<ScalarQ> acc(static_cast<std::size_t>(alg.dim()));
      for (std::size_t l = 0; l < k; ++l) {
        auto p = alg.multiply(e[i][l], e[l][j]);
        for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += p[c];
      }
      if (acc != e[i][j]) return false;
    }
  return true;
}

FormMatrix add_matrix(const FormMatrix& a, const FormMatrix& b, const ScalarQ& s) {
  FormMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) form_add(out[i][j], b[i][j], s);
  return out;
}

LiftResult lift_in(const FormSpace& s, const AlgMatrix& e, int adic, const std::optional<FormMatrix>& initial) {
  check_square(s.algebra(), e);
  if (!is_idempotent(s.algebra(), e)) fail(ErrorKind::Precondition, "e is not idempotent in A");
  const std::size_t k = e.size();
  const int top = 2 * adic;
  FormMatrix x(k, std::vector<NCForm>(k));
  if (initial) {
    if (initial->size() != k) fail(ErrorKind::InvalidInput, "initial lift has the wrong size");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        NCForm entry = form_truncate((*initial)[i][j], top);
        if (s.degree0(entry) != e[i][j]) fail(ErrorKind::Precondition, "initial lift does not reduce to e modulo IA");
        for (const auto& [w, c] : entry)
          if (form_degree(w) % 2) fail(ErrorKind::InvalidInput, "initial lift must be an even form");
        x[i][j] = entry;
      }
  } else {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) x[i][j] = s.element(e[i][j]);
  }
  FormMatrix one(k, std::vector<NCForm>(k));
  for (std::size_t i = 0; i < k; ++i) one[i][i] = NCForm{{Word{0}, ScalarQ(1)}};

  // y = x - x o x lies in IA, so y^m vanishes modulo IA^{n+1} for m > n.
  FormMatrix y = add_matrix(x, fedosov_matrix(s, x, x), ScalarQ(-1));
  FormMatrix series(k, std::vector<NCForm>(k));
  FormMatrix power = y;
  for (int m = 1; m <= adic; ++m) {
    series = add_matrix(series, power, ScalarQ(binomial(2 * m, m)));
    power = fedosov_matrix(s, power, y);
  }
  FormMatrix shifted = add_matrix(x, one, ScalarQ(Rational(-1, 2)));
  LiftResult r;
  r.lift = add_matrix(x, fedosov_matrix(s, shifted, series), ScalarQ(1));
  FormMatrix sq = fedosov_matrix(s, r.lift, r.lift);
  r.idempotent = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      NCForm diff = sq[i][j];
      form_add(diff, r.lift[i][j], ScalarQ(-1));
      if (!form_truncate(diff, top).empty()) r.idempotent = false;
    }
  return r;
}

}  // namespace

LiftResult lift_idempotent(const FDAlgebra& alg, const AlgMatrix& e, int adic, const std::optional<FormMatrix>& initial) {
  if (adic < 0) fail(ErrorKind::InvalidInput, "adic order must be >= 0");
  FormSpace s(alg, 2 * adic);
  return lift_in(s, e, adic, initial);
}

Chern0Result chern0(const XComplex& x, const AlgMatrix& e, const std::optional<FormMatrix>& initial) {
  FormSpace s(x.space().algebra(), 2 * x.adic());
  LiftResult lift = lift_in(s, e, x.adic(), initial);
  Chern0Result r;
  for (std::size_t i = 0; i < lift.lift.size(); ++i) form_add(r.trace, lift.lift[i][i]);
  r.reduced = x.reduce_even(r.trace);
  r.degree0 = s.degree0(r.reduced);
  r.cycle = x.is_cycle(r.trace);
  r.text = s.str(r.reduced);
  return r;
}

}  // namespace orbitkit
