#pragma once

#include <cstddef>
#include <vector>

#include "matchfield/tableau.hpp"

namespace mf {

/// All tableaux obtained from T by a swap: exchange the row-r entries of
/// two columns for a single row r, re-arrange both columns, and keep the
/// result when it is row-wise equal to T and differs from it. Output is
/// sorted and duplicate-free.
std::vector<Tableau> enumerate_swaps(const Tableau& t, const MatchingField& field);

struct QuadEquivResult {
  bool equivalent = false;
  std::vector<Tableau> path;  // from lhs to rhs inclusive when equivalent
  std::size_t explored = 0;   // tableaux visited before deciding
};

/// BFS over swaps, expanding the lexicographically least neighbor first.
/// Throws NotRowWiseEqual when the tableaux are not row-wise equal.
QuadEquivResult quadratic_equivalent(const Tableau& lhs, const Tableau& rhs,
                                     const MatchingField& field);

/// Every valid tableau row-wise equal to T (T included), sorted.
std::vector<Tableau> row_class(const Tableau& t, const MatchingField& field);

/// True when all members lie in one swap component. Members must be
/// pairwise row-wise equal.
bool class_connected(const std::vector<Tableau>& members, const MatchingField& field);

}  // namespace mf
