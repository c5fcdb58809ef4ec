#pragma once

#include <vector>

#include "matchfield/face_lattice.hpp"
#include "matchfield/hull.hpp"
#include "matchfield/matching_field.hpp"
#include "matchfield/numeric.hpp"
#include "matchfield/subsets.hpp"
#include "matchfield/weights.hpp"

namespace mf {

/// Integer point configuration of a matching field polytope: the flattened
/// exponent matrix of the chosen initial monomial of every Pluecker form,
/// one point per nonempty proper subset of [n], 2^n - 2 in total.
struct PointConfiguration {
  int n = 0;
  int ell = 0;
  size_t ambient_dim = 0;        // (n-1)*n
  std::vector<Subset> subsets;   // canonical order; points[i] belongs to subsets[i]
  std::vector<std::vector<Int>> points;
};

PointConfiguration matching_field_polytope(int n, int ell);

/// Same construction for an arbitrary coherent weight matrix.
PointConfiguration polytope_of_weights(const WeightMatrix& m, int ell_tag = -1);

/// Convex-position test via exact LP membership: flags[i] is 1 when
/// points[i] is a vertex of the hull of the whole set.
std::vector<char> vertex_flags_serial(const std::vector<std::vector<Int>>& points);
std::vector<char> vertex_flags_parallel(const std::vector<std::vector<Int>>& points);
std::vector<char> vertex_flags(const std::vector<std::vector<Int>>& points);

/// Hull + face enumeration in one call (small n only).
struct PolytopeAnalysis {
  ConvexHull hull;
  FaceLattice lattice;
};

PolytopeAnalysis analyze_polytope(const PointConfiguration& config);

std::vector<std::size_t> f_vector_of(int n, int ell);

}  // namespace mf
