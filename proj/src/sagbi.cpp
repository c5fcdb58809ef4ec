#include "matchfield/sagbi.hpp"

#include <unordered_map>

#include "matchfield/errors.hpp"
#include "matchfield/parallel.hpp"
#include "matchfield/swaps.hpp"
#include "matchfield/tableau.hpp"

namespace mf {

namespace {

// All tableaux with between 2 and max_columns columns, grouped into
// row-wise equality classes.
std::vector<std::vector<Tableau>> row_classes(const MatchingField& field, int max_columns,
                                              std::optional<int> grassmannian_k) {
  std::vector<Subset> vars = grassmannian_k ? all_k_subsets(field.n(), *grassmannian_k)
                                            : all_proper_subsets(field.n());
  std::vector<std::vector<int>> arranged;
  arranged.reserve(vars.size());
  for (const Subset& I : vars) arranged.push_back(field.column(I));

  std::unordered_map<std::string, std::vector<Tableau>> classes;
  const int count = static_cast<int>(vars.size());
  std::vector<int> pick;
  auto emit = [&]() {
    Tableau t;
    t.n = field.n();
    for (int idx : pick) t.columns.push_back(arranged[idx]);
    classes[row_signature(t)].push_back(t.canonical());
  };
  auto recurse = [&](auto&& self, int from, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int idx = from; idx < count; ++idx) {
      pick.push_back(idx);
      self(self, idx, remaining - 1);
      pick.pop_back();
    }
  };
  for (int columns = 2; columns <= max_columns; ++columns) recurse(recurse, 0, columns);

  std::vector<std::vector<Tableau>> out;
  out.reserve(classes.size());
  for (auto& [sig, members] : classes) out.push_back(std::move(members));
  return out;
}

QuadGenReport scan(const MatchingField& field, int max_columns,
                   std::optional<int> grassmannian_k, bool parallel) {
  auto classes = row_classes(field, max_columns, grassmannian_k);
  QuadGenReport rep;
  rep.classes = classes.size();
  for (const auto& c : classes) rep.class_members += c.size();

  std::vector<char> connected(classes.size(), 1);
  if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long i = 0; i < static_cast<long>(classes.size()); ++i)
      connected[i] = classes[i].size() <= 1 || class_connected(classes[i], field);
  } else {
    for (size_t i = 0; i < classes.size(); ++i)
      connected[i] = classes[i].size() <= 1 || class_connected(classes[i], field);
  }

  rep.generated = true;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (connected[i]) continue;
    rep.generated = false;
    rep.failures.push_back("disconnected class containing " + classes[i].front().to_string());
  }
  return rep;
}

}  // namespace

QuadGenReport quadratic_generation_scan_serial(const MatchingField& field, int max_columns,
                                               std::optional<int> grassmannian_k) {
  return scan(field, max_columns, grassmannian_k, false);
}

QuadGenReport quadratic_generation_scan_parallel(const MatchingField& field, int max_columns,
                                                 std::optional<int> grassmannian_k) {
  return scan(field, max_columns, grassmannian_k, true);
}

QuadGenReport quadratic_generation_scan(const MatchingField& field, int max_columns,
                                        std::optional<int> grassmannian_k) {
  return scan(field, max_columns, grassmannian_k, thread_count() > 1);
}

SagbiReport sagbi_certificate_degree2(const MatchingField& field, const WeightMatrix* m,
                                      std::optional<int> grassmannian_k) {
  SagbiReport rep;

  QuadGenReport qg = quadratic_generation_scan(field, 3, grassmannian_k);
  rep.quadratic_generation = qg.generated;
  rep.failures = qg.failures;

  rep.dim = dim_degree2_initial_algebra(field, grassmannian_k);
  rep.dim_reference =
      dim_degree2_initial_algebra(MatchingField::diagonal(field.n()), grassmannian_k);
  rep.dim_equal = rep.dim == rep.dim_reference;
  if (!rep.dim_equal)
    rep.failures.push_back("dim " + std::to_string(rep.dim) + " != diagonal dim " +
                           std::to_string(rep.dim_reference));

  auto kernel = degree2_kernel(field, grassmannian_k);
  rep.kernel_size = kernel.size();
  if (m != nullptr) {
    rep.lifts_checked = true;
    rep.lifts_exist = true;
    WeightVector w = weight_vector(*m);
    for (const SignedBinomial& b : kernel) {
      try {
        lift_to_plucker_relation(b, w, field.n());
      } catch (const NoLift&) {
        rep.lifts_exist = false;
        rep.failures.push_back("no lift for " + b.to_string(field));
      }
    }
  }
  return rep;
}

SagbiReport sagbi_certificate_degree2(int n, int ell, std::optional<int> grassmannian_k) {
  MatchingField field = MatchingField::block(n, ell);
  WeightMatrix m = weight_matrix_block(n, ell);
  return sagbi_certificate_degree2(field, &m, grassmannian_k);
}

}  // namespace mf
