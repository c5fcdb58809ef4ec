#pragma once

#include <cstdint>
#include <vector>

#include "matchfield/linalg.hpp"
#include "matchfield/numeric.hpp"

namespace mf {

/// Exact convex hull of an integer point set, computed by the double
/// description method inside the affine hull of the points.
struct ConvexHull {
  size_t ambient_dim = 0;
  int affine_dim = 0;
  std::vector<std::vector<Int>> points;

  std::vector<char> is_vertex;      // per input point
  std::vector<int> vertex_points;   // point index of each hull vertex, ascending

  struct Facet {
    IntVector ineq;                  // (c0, c): c0 + c.x >= 0, primitive integers
    std::vector<int> tight_points;   // input points with equality
    std::uint64_t vertex_mask = 0;   // over vertex_points order
  };
  std::vector<Facet> facets;

  /// Equations (e0, e) with e0 + e.x = 0 on the whole configuration;
  /// together with the facet inequalities this is a full H-description.
  std::vector<IntVector> affine_hull_equations;

  int vertex_count() const { return static_cast<int>(vertex_points.size()); }
  int facet_count() const { return static_cast<int>(facets.size()); }
};

/// Requires at least one point; all arithmetic is exact rational.
ConvexHull convex_hull(const std::vector<std::vector<Int>>& points);

}  // namespace mf
