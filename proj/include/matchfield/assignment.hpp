#pragma once

#include <optional>
#include <vector>

#include "matchfield/numeric.hpp"

namespace mf {

struct AssignmentResult {
  std::vector<int> row_to_col;  // row r is matched to column row_to_col[r]
  Rat cost;
};

/// Exact min-cost perfect assignment on a square rational matrix
/// (Jonker-Volgenant style shortest augmenting paths with potentials).
AssignmentResult min_cost_assignment(const std::vector<std::vector<Rat>>& cost);

/// Value of the best assignment distinct from `best`, found by forbidding
/// one matched edge at a time. nullopt for 1x1 matrices.
std::optional<Rat> second_best_assignment(const std::vector<std::vector<Rat>>& cost,
                                          const std::vector<int>& best);

}  // namespace mf
