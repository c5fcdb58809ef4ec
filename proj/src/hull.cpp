#include "matchfield/hull.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mf {

namespace {

// Dot product of integer vectors.
Int idot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Ray {
  IntVector v;             // primitive, length d+1
  std::uint64_t tight = 0; // processed constraints satisfied with equality
};

}  // namespace

ConvexHull convex_hull(const std::vector<std::vector<Int>>& input) {
  if (input.empty()) throw std::invalid_argument("convex_hull: need at least one point");
  const size_t m = input.size();
  const size_t dim = input[0].size();
  for (const auto& p : input)
    if (p.size() != dim) throw std::invalid_argument("convex_hull: mixed dimensions");
  if (m > 64) throw std::invalid_argument("convex_hull: more than 64 points is unsupported");

  ConvexHull hull;
  hull.ambient_dim = dim;
  hull.points = input;

  // Affine basis: independent differences from the first point.
  const std::vector<Int>& origin = input[0];
  std::vector<size_t> basis_points;
  {
    std::vector<IntVector> pivots;
    for (size_t i = 1; i < m; ++i) {
      IntVector diff(dim);
      for (size_t c = 0; c < dim; ++c) diff[c] = input[i][c] - origin[c];
      std::vector<IntVector> trial = pivots;
      trial.push_back(diff);
      if (integer_row_rank(trial) > pivots.size()) {
        pivots.push_back(std::move(diff));
        basis_points.push_back(i);
      }
    }
  }
  const int d = static_cast<int>(basis_points.size());
  hull.affine_dim = d;

  // Affine hull equations: nullspace of the difference matrix.
  {
    RatMatrix diffs(basis_points.size(), dim);
    for (size_t r = 0; r < basis_points.size(); ++r)
      for (size_t c = 0; c < dim; ++c)
        diffs.at(r, c) = Rat(input[basis_points[r]][c] - origin[c]);
    // Kernel via reduced row echelon: free columns parametrize.
    RatMatrix a = diffs;
    std::vector<long> pivot_of_col(dim, -1);
    size_t row = 0;
    for (size_t col = 0; col < dim && row < a.rows; ++col) {
      size_t sel = row;
      while (sel < a.rows && a.at(sel, col) == 0) ++sel;
      if (sel == a.rows) continue;
      for (size_t c = 0; c < dim; ++c) std::swap(a.at(sel, c), a.at(row, c));
      Rat inv = a.at(row, col);
      for (size_t c = 0; c < dim; ++c) a.at(row, c) /= inv;
      for (size_t r = 0; r < a.rows; ++r) {
        if (r == row || a.at(r, col) == 0) continue;
        Rat f = a.at(r, col);
        for (size_t c = 0; c < dim; ++c) a.at(r, c) -= f * a.at(row, c);
      }
      pivot_of_col[col] = static_cast<long>(row);
      ++row;
    }
    for (size_t col = 0; col < dim; ++col) {
      if (pivot_of_col[col] >= 0) continue;
      RatVector c_vec(dim, Rat(0));
      c_vec[col] = 1;
      for (size_t pc = 0; pc < dim; ++pc)
        if (pivot_of_col[pc] >= 0) c_vec[pc] = -a.at(pivot_of_col[pc], col);
      IntVector eq_normal = primitive_integer(c_vec);
      Int offset = 0;
      for (size_t cc = 0; cc < dim; ++cc) offset -= eq_normal[cc] * origin[cc];
      IntVector eq(dim + 1);
      eq[0] = offset;
      for (size_t cc = 0; cc < dim; ++cc) eq[cc + 1] = eq_normal[cc];
      hull.affine_hull_equations.push_back(std::move(eq));
    }
  }

  if (d == 0) {  // single point (possibly repeated)
    hull.is_vertex.assign(m, 0);
    hull.is_vertex[0] = 1;
    hull.vertex_points = {0};
    for (size_t i = 1; i < m; ++i)
      if (input[i] == input[0]) hull.is_vertex[i] = 1;
    return hull;
  }

  // Reduced rational coordinates of every point in the affine basis.
  RatMatrix basis_matrix(dim, d);
  for (int j = 0; j < d; ++j)
    for (size_t c = 0; c < dim; ++c)
      basis_matrix.at(c, j) = Rat(input[basis_points[j]][c] - origin[c]);

  std::vector<RatVector> reduced(m);
  for (size_t i = 0; i < m; ++i) {
    RatVector rhs(dim);
    for (size_t c = 0; c < dim; ++c) rhs[c] = Rat(input[i][c] - origin[c]);
    auto x = solve_linear_system(basis_matrix, rhs);
    if (!x) throw std::logic_error("convex_hull: point escapes its affine hull");
    reduced[i] = std::move(*x);
  }

  // Primitive integer homogenizations (w, w*x), w > 0.
  std::vector<IntVector> homog(m);
  for (size_t i = 0; i < m; ++i) {
    RatVector h(d + 1);
    h[0] = 1;
    for (int j = 0; j < d; ++j) h[j + 1] = reduced[i][j];
    homog[i] = primitive_integer(h);
  }

  // Double description: seed with the simplex formed by the origin and
  // the basis points, whose constraint matrix is invertible.
  std::vector<size_t> seed{0};
  seed.insert(seed.end(), basis_points.begin(), basis_points.end());
  std::vector<char> processed(m, 0);

  std::vector<Ray> rays;
  {
    RatMatrix mseed(d + 1, d + 1);
    for (int r = 0; r <= d; ++r)
      for (int c = 0; c <= d; ++c) mseed.at(r, c) = Rat(homog[seed[r]][c]);
    auto inv = invert(mseed);
    if (!inv) throw std::logic_error("convex_hull: seed simplex is degenerate");
    for (int j = 0; j <= d; ++j) {
      RatVector col(d + 1);
      for (int r = 0; r <= d; ++r) col[r] = inv->at(r, j);
      Ray ray;
      ray.v = primitive_integer(col);
      for (int r = 0; r <= d; ++r)
        if (r != j) ray.tight |= 1ull << seed[r];
      rays.push_back(std::move(ray));
    }
    for (size_t idx : seed) processed[idx] = 1;
  }

  for (size_t t = 0; t < m; ++t) {
    if (processed[t]) continue;
    processed[t] = 1;
    std::vector<Int> value(rays.size());
    bool any_negative = false;
    for (size_t r = 0; r < rays.size(); ++r) {
      value[r] = idot(homog[t], rays[r].v);
      if (value[r] < 0) any_negative = true;
      if (value[r] == 0) rays[r].tight |= 1ull << t;
    }
    if (!any_negative) continue;

    std::vector<Ray> next;
    for (size_t r = 0; r < rays.size(); ++r)
      if (value[r] >= 0) next.push_back(rays[r]);

    std::set<IntVector> emitted;
    for (size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        // Combinatorial adjacency: no third ray's tight set contains the
        // common tight set of p and q.
        const std::uint64_t common = rays[p].tight & rays[q].tight;
        bool adjacent = true;
        for (size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          adjacent = (common & ~rays[o].tight) != 0;
        }
        if (!adjacent) continue;

        Ray fresh;
        fresh.v.assign(d + 1, Int(0));
        for (int c = 0; c <= d; ++c)
          fresh.v[c] = value[p] * rays[q].v[c] - value[q] * rays[p].v[c];
        make_primitive(fresh.v);
        if (!emitted.insert(fresh.v).second) continue;
        fresh.tight = common | (1ull << t);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  // Rays are the facets; recompute tight sets over every input point and
  // translate the inequalities back to ambient coordinates.
  RatMatrix gram(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      Rat s = 0;
      for (size_t k = 0; k < dim; ++k) s += basis_matrix.at(k, r) * basis_matrix.at(k, c);
      gram.at(r, c) = s;
    }
  auto gram_inv = invert(gram);
  if (!gram_inv) throw std::logic_error("convex_hull: Gram matrix is singular");

  for (const Ray& ray : rays) {
    ConvexHull::Facet facet;
    for (size_t i = 0; i < m; ++i)
      if (idot(homog[i], ray.v) == 0) facet.tight_points.push_back(static_cast<int>(i));

    // ambient normal c = B * Ginv * a, offset c0 = a0 - c.origin
    RatVector ga(d, Rat(0));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) ga[r] += gram_inv->at(r, c) * Rat(ray.v[c + 1]);
    RatVector full(dim + 1, Rat(0));
    for (size_t k = 0; k < dim; ++k) {
      Rat s = 0;
      for (int r = 0; r < d; ++r) s += basis_matrix.at(k, r) * ga[r];
      full[k + 1] = s;
    }
    full[0] = Rat(ray.v[0]);
    for (size_t k = 0; k < dim; ++k) full[0] -= full[k + 1] * Rat(origin[k]);
    facet.ineq = primitive_integer(full);
    hull.facets.push_back(std::move(facet));
  }
  std::sort(hull.facets.begin(), hull.facets.end(),
            [](const ConvexHull::Facet& a, const ConvexHull::Facet& b) { return a.ineq < b.ineq; });

  // A point is a vertex when its tight facet normals span the affine hull.
  std::vector<std::vector<int>> tight_of_point(m);
  for (size_t f = 0; f < hull.facets.size(); ++f)
    for (int pi : hull.facets[f].tight_points) tight_of_point[pi].push_back(static_cast<int>(f));

  // Ambient facet normals lie in the direction space of the affine hull
  // and are injective images of the reduced normals, so the rank test can
  // run directly on them.
  hull.is_vertex.assign(m, 0);
  for (size_t i = 0; i < m; ++i) {
    std::vector<IntVector> normals;
    normals.reserve(tight_of_point[i].size());
    for (int f : tight_of_point[i])
      normals.emplace_back(hull.facets[f].ineq.begin() + 1, hull.facets[f].ineq.end());
    if (normals.size() >= static_cast<size_t>(d) &&
        integer_row_rank(normals) == static_cast<size_t>(d))
      hull.is_vertex[i] = 1;
  }
  for (size_t i = 0; i < m; ++i)
    if (hull.is_vertex[i]) hull.vertex_points.push_back(static_cast<int>(i));

  // Vertex masks per facet.
  std::vector<int> vertex_slot(m, -1);
  for (size_t v = 0; v < hull.vertex_points.size(); ++v) vertex_slot[hull.vertex_points[v]] = static_cast<int>(v);
  if (hull.vertex_points.size() > 64)
    throw std::logic_error("convex_hull: more than 64 vertices is unsupported");
  for (auto& facet : hull.facets)
    for (int pi : facet.tight_points)
      if (vertex_slot[pi] >= 0) facet.vertex_mask |= 1ull << vertex_slot[pi];

  return hull;
}

}  // namespace mf
