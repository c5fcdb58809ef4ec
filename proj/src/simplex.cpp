#include "matchfield/simplex.hpp"

#include <stdexcept>

namespace mf {

bool feasible_nonnegative_system(const RatMatrix& a, const RatVector& b) {
  const size_t rows = a.rows, cols = a.cols;
  if (b.size() != rows) throw std::invalid_argument("feasible_nonnegative_system: size mismatch");

  // Tableau with one artificial variable per row; phase-I objective is the
  // sum of artificials. Bland's rule guarantees termination with exact
  // rational pivots.
  const size_t width = cols + rows + 1;  // structural, artificial, rhs
  std::vector<RatVector> t(rows + 1, RatVector(width, Rat(0)));
  for (size_t r = 0; r < rows; ++r) {
    const bool flip = b[r] < 0;
    for (size_t c = 0; c < cols; ++c) t[r][c] = flip ? -a.at(r, c) : a.at(r, c);
    t[r][cols + r] = 1;
    t[r][width - 1] = flip ? -b[r] : b[r];
  }
  std::vector<size_t> basis(rows);
  for (size_t r = 0; r < rows; ++r) basis[r] = cols + r;

  // objective row: maximize -sum(artificials); reduced costs start as the
  // negated column sums over all rows (artificials start basic).
  for (size_t c = 0; c < width; ++c) {
    Rat sum = 0;
    for (size_t r = 0; r < rows; ++r) sum += t[r][c];
    t[rows][c] = -sum;
  }
  for (size_t r = 0; r < rows; ++r) t[rows][cols + r] = 0;

  while (true) {
    size_t enter = width - 1;
    for (size_t c = 0; c + 1 < width; ++c) {
      if (t[rows][c] < 0) {  // Bland: first improving column
        enter = c;
        break;
      }
    }
    if (enter == width - 1) break;

    size_t leave = rows;
    for (size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      if (leave == rows) {
        leave = r;
        continue;
      }
      Rat lhs = t[r][width - 1] * t[leave][enter];
      Rat rhs = t[leave][width - 1] * t[r][enter];
      if (lhs < rhs || (lhs == rhs && basis[r] < basis[leave])) leave = r;
    }
    if (leave == rows) throw std::logic_error("phase-I simplex: unbounded objective");

    Rat piv = t[leave][enter];
    for (size_t c = 0; c < width; ++c) t[leave][c] /= piv;
    for (size_t r = 0; r <= rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rat f = t[r][enter];
      for (size_t c = 0; c < width; ++c) t[r][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }

  return t[rows][width - 1] == 0;
}

bool in_convex_hull(const std::vector<Int>& p, const std::vector<std::vector<Int>>& points) {
  if (points.empty()) return false;
  const size_t dim = p.size();
  RatMatrix a(dim + 1, points.size());
  RatVector b(dim + 1);
  for (size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != dim) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    for (size_t i = 0; i < dim; ++i) a.at(i, j) = Rat(points[j][i]);
    a.at(dim, j) = 1;
  }
  for (size_t i = 0; i < dim; ++i) b[i] = Rat(p[i]);
  b[dim] = 1;
  return feasible_nonnegative_system(a, b);
}

}  // namespace mf
