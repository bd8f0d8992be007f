#include "orbitkit/simplicial.hpp"

#include <algorithm>
#include <map>

#include "orbitkit/errors.hpp"

namespace orbitkit {

int SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > top_dimension()) return 0;
  return static_cast<int>(simplices[static_cast<std::size_t>(dim)].size());
}

int SimplicialComplex::index_of(const Simplex& s) const {
  int dim = static_cast<int>(s.size()) - 1;
  if (dim < 0 || dim > top_dimension()) return -1;
  const auto& list = simplices[static_cast<std::size_t>(dim)];
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return -1;
  return static_cast<int>(it - list.begin());
}

SimplicialComplex make_complex(std::string name, std::vector<std::vector<Simplex>> simplices) {
  SimplicialComplex k;
  k.name = std::move(name);
  while (!simplices.empty() && simplices.back().empty()) simplices.pop_back();
  for (std::size_t dim = 0; dim < simplices.size(); ++dim) {
    auto& list = simplices[dim];
    for (auto& s : list) {
      std::sort(s.begin(), s.end());
      if (s.size() != dim + 1 || std::adjacent_find(s.begin(), s.end()) != s.end())
        fail(ErrorKind::InvalidInput, "simplex of dimension " + std::to_string(dim) + " must have " + std::to_string(dim + 1) + " distinct vertices");
      for (int v : s)
        if (v < 0) fail(ErrorKind::InvalidInput, "negative vertex index");
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  k.simplices = std::move(simplices);
  for (const auto& v : k.simplices.empty() ? std::vector<Simplex>{} : k.simplices[0]) k.vertex_count = std::max(k.vertex_count, v[0] + 1);
  for (int dim = 1; dim <= k.top_dimension(); ++dim) {
    for (const auto& s : k.simplices[static_cast<std::size_t>(dim)]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(i));
        if (k.index_of(face) < 0) fail(ErrorKind::InvalidInput, "complex is missing a face of a " + std::to_string(dim) + "-simplex");
      }
    }
  }
  return k;
}

std::vector<SparseVec<Rational>> boundary_columns(const SimplicialComplex& k, int dim) {
  std::vector<SparseVec<Rational>> cols;
  if (dim <= 0 || dim > k.top_dimension()) return cols;
  for (const auto& s : k.simplices[static_cast<std::size_t>(dim)]) {
    SparseVec<Rational> col;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      col.emplace_back(k.index_of(face), Rational(i % 2 ? -1 : 1));
    }
    normalize(col);
    cols.push_back(std::move(col));
  }
  return cols;
}

void check_boundary_squared(const SimplicialComplex& k) {
  for (int dim = 2; dim <= k.top_dimension(); ++dim) {
    auto outer = boundary_columns(k, dim);
    auto inner = boundary_columns(k, dim - 1);
    for (const auto& col : outer) {
      SparseVec<Rational> acc;
      for (const auto& [face, c] : col)
        for (const auto& [ff, cc] : inner[static_cast<std::size_t>(face)]) acc.emplace_back(ff, c * cc);
      normalize(acc);
      if (!acc.empty()) fail(ErrorKind::Precondition, "boundary squared is nonzero in dimension " + std::to_string(dim));
    }
  }
}

namespace {

int boundary_rank(const SimplicialComplex& k, int dim) {
  if (dim <= 0 || dim > k.top_dimension()) return 0;
  return exact_rank(boundary_columns(k, dim), k.count(dim - 1));
}

}  // namespace

std::vector<int> betti_numbers(const SimplicialComplex& k) {
  check_boundary_squared(k);
  std::vector<int> b;
  for (int dim = 0; dim <= k.top_dimension(); ++dim) b.push_back(k.count(dim) - boundary_rank(k, dim) - boundary_rank(k, dim + 1));
  return b;
}

long euler_characteristic(const SimplicialComplex& k) {
  auto b = betti_numbers(k);
  long chi = 0, faces = 0;
  for (int dim = 0; dim <= k.top_dimension(); ++dim) {
    long sign = dim % 2 ? -1 : 1;
    chi += sign * b[static_cast<std::size_t>(dim)];
    faces += sign * k.count(dim);
  }
  if (chi != faces) fail(ErrorKind::Precondition, "Betti sum disagrees with the alternating face count");
  return chi;
}

HodgeReport hodge_index(const SimplicialComplex& k) {
  HodgeReport r;
  r.betti = betti_numbers(k);
  r.euler = euler_characteristic(k);
  // Global offsets of each cochain space inside the even/odd sums.
  std::vector<int> offset(static_cast<std::size_t>(k.top_dimension() + 2), 0);
  for (int dim = 0; dim <= k.top_dimension(); ++dim) {
    int& total = dim % 2 ? r.odd_dim : r.even_dim;
    offset[static_cast<std::size_t>(dim)] = total;
    total += k.count(dim);
  }
  // Column of D for each even basis cochain: d raises the dimension (rows of
  // the boundary), delta lowers it (boundary column).
  std::vector<SparseVec<Rational>> cols(static_cast<std::size_t>(r.even_dim));
  for (int dim = 1; dim <= k.top_dimension(); ++dim) {
    auto bd = boundary_columns(k, dim);
    for (std::size_t j = 0; j < bd.size(); ++j) {
      for (const auto& [i, c] : bd[j]) {
        if (dim % 2) {
          // d: (dim-1)-cochain i (even) -> dim-cochain j (odd)
          cols[static_cast<std::size_t>(offset[static_cast<std::size_t>(dim - 1)] + i)].emplace_back(offset[static_cast<std::size_t>(dim)] + static_cast<int>(j), c);
        } else {
          // delta: dim-cochain j (even) -> (dim-1)-cochain i (odd)
          cols[static_cast<std::size_t>(offset[static_cast<std::size_t>(dim)] + static_cast<int>(j))].emplace_back(offset[static_cast<std::size_t>(dim - 1)] + i, c);
        }
      }
    }
  }
  for (auto& c : cols) normalize(c);
  r.rank = exact_rank(std::move(cols), r.odd_dim);
  r.kernel = r.even_dim - r.rank;
  r.cokernel = r.odd_dim - r.rank;
  r.index = r.kernel - r.cokernel;
  int even_betti = 0, odd_betti = 0;
  for (std::size_t dim = 0; dim < r.betti.size(); ++dim) (dim % 2 ? odd_betti : even_betti) += r.betti[dim];
  r.pass = r.index == r.euler && r.kernel == even_betti && r.cokernel == odd_betti;
  return r;
}

namespace {

// Closes a list of top simplices under taking faces.
SimplicialComplex closure(std::string name, const std::vector<Simplex>& top) {
  std::map<int, std::vector<Simplex>> by_dim;
  for (auto s : top) {
    std::sort(s.begin(), s.end());
    int n = static_cast<int>(s.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      Simplex f;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) f.push_back(s[static_cast<std::size_t>(i)]);
      by_dim[static_cast<int>(f.size()) - 1].push_back(f);
    }
  }
  std::vector<std::vector<Simplex>> lists;
  for (auto& [dim, list] : by_dim) {
    lists.resize(static_cast<std::size_t>(dim + 1));
    lists[static_cast<std::size_t>(dim)] = std::move(list);
  }
  return make_complex(std::move(name), std::move(lists));
}

}  // namespace

SimplicialComplex complex_point() { return closure("point", {{0}}); }

SimplicialComplex complex_cycle(int n) {
  if (n < 3) fail(ErrorKind::InvalidInput, "cycle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return closure("cycle" + std::to_string(n), edges);
}

SimplicialComplex complex_octahedron() {
  std::vector<Simplex> tri;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) tri.push_back({a, b, c});
  return closure("octahedron", tri);
}

SimplicialComplex complex_torus7() {
  std::vector<Simplex> tri;
  for (int i = 0; i < 7; ++i) {
    tri.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tri.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return closure("torus7", tri);
}

SimplicialComplex builtin_complex(const std::string& name) {
  if (name == "point") return complex_point();
  if (name == "octahedron") return complex_octahedron();
  if (name == "torus7") return complex_torus7();
  if (name.rfind("cycle", 0) == 0 && name.size() > 5) {
    try {
      return complex_cycle(std::stoi(name.substr(5)));
    } catch (const std::logic_error&) {
    }
  }
  fail(ErrorKind::InvalidInput, "unknown complex '" + name + "'");
}

}  // namespace orbitkit
