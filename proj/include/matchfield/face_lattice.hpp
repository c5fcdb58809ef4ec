#pragma once

#include <cstddef>
#include <vector>

#include "matchfield/hull.hpp"

namespace mf {

struct FaceLattice {
  int dim = 0;                        // affine dimension of the polytope
  std::vector<std::size_t> f_vector;  // face counts for dimensions 0..dim-1
  std::size_t total_faces = 0;        // proper nonempty faces
};

/// Enumerates all faces from the vertex-facet incidences by walking cover
/// relations top-down; the parallel variant fans out over each level.
FaceLattice face_lattice_serial(const ConvexHull& hull);
FaceLattice face_lattice_parallel(const ConvexHull& hull);
FaceLattice face_lattice(const ConvexHull& hull);

/// Face-lattice isomorphism via a vertex bijection carrying the facet
/// family of one hull onto the other (color refinement + backtracking).
bool combinatorially_isomorphic(const ConvexHull& a, const ConvexHull& b);

}  // namespace mf
