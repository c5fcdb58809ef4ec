#pragma once

#include <vector>

#include "matchfield/linalg.hpp"
#include "matchfield/numeric.hpp"

namespace mf {

/// Exact feasibility of A x = b, x >= 0 (phase-I simplex, Bland's rule).
bool feasible_nonnegative_system(const RatMatrix& a, const RatVector& b);

/// Is p a convex combination of the given points?
bool in_convex_hull(const std::vector<Int>& p, const std::vector<std::vector<Int>>& points);

}  // namespace mf
