#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchfield/matching_field.hpp"
#include "matchfield/pideal.hpp"
#include "matchfield/weights.hpp"

namespace mf {

struct QuadGenReport {
  bool generated = false;
  std::size_t classes = 0;      // row-wise equality classes inspected
  std::size_t class_members = 0;
  std::vector<std::string> failures;  // one witness per disconnected class
};

/// Exhaustive quadratic-generation evidence: every row-wise equality
/// class of tableaux with at most max_columns columns is connected under
/// swaps. The parallel variant fans out over classes.
QuadGenReport quadratic_generation_scan_serial(const MatchingField& field, int max_columns,
                                               std::optional<int> grassmannian_k = {});
QuadGenReport quadratic_generation_scan_parallel(const MatchingField& field, int max_columns,
                                                 std::optional<int> grassmannian_k = {});
QuadGenReport quadratic_generation_scan(const MatchingField& field, int max_columns,
                                        std::optional<int> grassmannian_k = {});

struct SagbiReport {
  bool quadratic_generation = false;
  bool dim_equal = false;
  bool lifts_exist = false;
  bool lifts_checked = false;  // false when no weight matrix is available
  std::size_t kernel_size = 0;
  std::size_t dim = 0;
  std::size_t dim_reference = 0;  // the diagonal field's dimension
  std::vector<std::string> failures;

  bool certified() const {
    return quadratic_generation && dim_equal && lifts_checked && lifts_exist;
  }
};

/// Degree-2 SAGBI certificate for the block diagonal field B_ell.
SagbiReport sagbi_certificate_degree2(int n, int ell, std::optional<int> grassmannian_k = {});

/// Entry point for an arbitrary matching field; pass a weight matrix
/// inducing it to enable the lift check (nullptr skips it).
SagbiReport sagbi_certificate_degree2(const MatchingField& field, const WeightMatrix* m,
                                      std::optional<int> grassmannian_k = {});

}  // namespace mf
