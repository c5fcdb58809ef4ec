#include "matchfield/assignment.hpp"

#include <stdexcept>

namespace mf {

namespace {

// Shortest-augmenting-path assignment with a sentinel standing in for
// +infinity; sentinel = 1 + sum of |entries|, so any matching that avoids
// forbidden edges beats any that does not.
AssignmentResult solve(const std::vector<std::vector<Rat>>& cost,
                       const std::vector<std::vector<char>>& forbidden) {
  const int n = static_cast<int>(cost.size());
  Rat big = 1;
  for (const auto& row : cost)
    for (const Rat& c : row) big += c < 0 ? -c : c;

  auto entry = [&](int i, int j) -> Rat { return forbidden[i][j] ? big : cost[i][j]; };

  // 1-based internals, standard potentials formulation.
  std::vector<Rat> u(n + 1), v(n + 1);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<Rat> minv(n + 1, big * (n + 1));
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = match[j0], j1 = -1;
      Rat delta = big * (n + 2);
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rat cur = entry(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0);
  }

  AssignmentResult res;
  res.row_to_col.assign(n, -1);
  res.cost = 0;
  for (int j = 1; j <= n; ++j) {
    res.row_to_col[match[j] - 1] = j - 1;
    res.cost += entry(match[j] - 1, j - 1);
  }
  if (res.cost >= big) throw std::runtime_error("min_cost_assignment: no feasible assignment");
  return res;
}

}  // namespace

AssignmentResult min_cost_assignment(const std::vector<std::vector<Rat>>& cost) {
  if (cost.empty()) throw std::invalid_argument("min_cost_assignment: empty matrix");
  std::vector<std::vector<char>> forbidden(cost.size(), std::vector<char>(cost.size(), 0));
  return solve(cost, forbidden);
}

std::optional<Rat> second_best_assignment(const std::vector<std::vector<Rat>>& cost,
                                          const std::vector<int>& best) {
  const int n = static_cast<int>(cost.size());
  if (n < 2) return std::nullopt;
  std::optional<Rat> second;
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<char>> forbidden(n, std::vector<char>(n, 0));
    forbidden[i][best[i]] = 1;
    Rat value = solve(cost, forbidden).cost;
    if (!second || value < *second) second = value;
  }
  return second;
}

}  // namespace mf
