#pragma once

#include <string>
#include <vector>

#include "orbitkit/exact_linalg.hpp"

namespace orbitkit {

using Simplex = std::vector<int>;

/// Finite simplicial complex; simplices are stored with sorted vertices and
/// oriented by that order.
struct SimplicialComplex {
  std::string name;
  int vertex_count = 0;
  std::vector<std::vector<Simplex>> simplices;  // by dimension

  int top_dimension() const { return static_cast<int>(simplices.size()) - 1; }
  int count(int dim) const;
  int index_of(const Simplex& s) const;  // -1 if absent
};

/// Sorts vertices, removes duplicates and validates that every face is present (InvalidInput otherwise).
SimplicialComplex make_complex(std::string name, std::vector<std::vector<Simplex>> simplices);

/// Boundary matrix of dimension k -> k-1 as sparse columns (one per k-simplex).
std::vector<SparseVec<Rational>> boundary_columns(const SimplicialComplex& k, int dim);

/// Verifies boundary o boundary = 0 in every dimension; throws Precondition otherwise.
void check_boundary_squared(const SimplicialComplex& k);

std::vector<int> betti_numbers(const SimplicialComplex& k);

/// Alternating sum of Betti numbers; throws Precondition if it disagrees with the face count.
long euler_characteristic(const SimplicialComplex& k);

struct HodgeReport {
  int even_dim = 0, odd_dim = 0;
  int rank = 0;
  int kernel = 0, cokernel = 0;
  long index = 0;
  long euler = 0;
  std::vector<int> betti;
  bool pass = false;  // index == euler, kernel == even Betti sum, cokernel == odd Betti sum
};

/// D = d + delta from even to odd cochains, delta the transpose of the coboundary d.
HodgeReport hodge_index(const SimplicialComplex& k);

SimplicialComplex complex_point();
SimplicialComplex complex_cycle(int n);
SimplicialComplex complex_octahedron();
SimplicialComplex complex_torus7();
/// "point", "cycle6", "octahedron", "torus7".
SimplicialComplex builtin_complex(const std::string& name);

}  // namespace orbitkit
