#include "matchfield/polytope.hpp"

#include <stdexcept>

#include "matchfield/parallel.hpp"
#include "matchfield/simplex.hpp"

namespace mf {

PointConfiguration polytope_of_weights(const WeightMatrix& m, int ell_tag) {
  PointConfiguration config;
  config.n = m.n;
  config.ell = ell_tag;
  config.ambient_dim = static_cast<size_t>(m.n - 1) * m.n;
  config.subsets = all_proper_subsets(m.n);
  config.points.reserve(config.subsets.size());
  for (const Subset& I : config.subsets) {
    InitialTermReport rep = initial_term(m, I);  // NonGenericWeight propagates
    std::vector<Int> pt(config.ambient_dim);
    for (size_t i = 0; i < rep.exponent.e.size(); ++i) pt[i] = rep.exponent.e[i];
    config.points.push_back(std::move(pt));
  }
  return config;
}

PointConfiguration matching_field_polytope(int n, int ell) {
  WeightMatrix m = weight_matrix_block(n, ell);
  PointConfiguration config = polytope_of_weights(m, ell);
  if (config.points.size() != (size_t(1) << n) - 2)
    throw std::logic_error("matching_field_polytope: expected 2^n - 2 points");
  return config;
}

namespace {

std::vector<char> flags(const std::vector<std::vector<Int>>& points, bool parallel) {
  std::vector<char> out(points.size(), 0);
  auto probe = [&points](size_t i) -> char {
    std::vector<std::vector<Int>> rest;
    rest.reserve(points.size() - 1);
    for (size_t j = 0; j < points.size(); ++j)
      if (j != i) rest.push_back(points[j]);
    if (rest.empty()) return 1;
    return in_convex_hull(points[i], rest) ? 0 : 1;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long i = 0; i < static_cast<long>(points.size()); ++i) out[i] = probe(i);
  } else {
    for (size_t i = 0; i < points.size(); ++i) out[i] = probe(i);
  }
  return out;
}

}  // namespace

std::vector<char> vertex_flags_serial(const std::vector<std::vector<Int>>& points) {
  return flags(points, false);
}

std::vector<char> vertex_flags_parallel(const std::vector<std::vector<Int>>& points) {
  return flags(points, true);
}

std::vector<char> vertex_flags(const std::vector<std::vector<Int>>& points) {
  return flags(points, thread_count() > 1);
}

PolytopeAnalysis analyze_polytope(const PointConfiguration& config) {
  PolytopeAnalysis out;
  out.hull = convex_hull(config.points);
  out.lattice = face_lattice(out.hull);
  return out;
}

std::vector<std::size_t> f_vector_of(int n, int ell) {
  return analyze_polytope(matching_field_polytope(n, ell)).lattice.f_vector;
}

}  // namespace mf
