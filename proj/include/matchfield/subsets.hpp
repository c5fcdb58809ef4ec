#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mf {

/// A nonempty proper subset of [n] = {1,...,n}, stored as a strictly
/// increasing element list. Subsets index Pluecker variables P_I.
struct Subset {
  int n = 0;
  std::vector<int> elems;  // strictly increasing, 1-based, size in [1, n-1]

  Subset() = default;
  Subset(int ambient, std::vector<int> elements);

  int size() const { return static_cast<int>(elems.size()); }
  bool contains(int e) const;

  /// Number of elements lying in the first block {1,...,ell}.
  int count_leading_block(int ell) const;

  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  auto operator<=>(const Subset&) const = default;
};

/// Validates without throwing; Subset's constructor throws on violation.
bool is_valid_subset(int n, const std::vector<int>& elems);

/// All nonempty proper subsets of [n] in canonical order: by size, then
/// lexicographic on the element list. This is the documented variable
/// order for weight vectors and generator printing.
std::vector<Subset> all_proper_subsets(int n);

/// All subsets of size k, lexicographic.
std::vector<Subset> all_k_subsets(int n, int k);

/// Position of I in all_proper_subsets(I.n); dense table key for
/// explicit matching fields. Computed via the combinatorial number
/// system, O(n) per call.
int subset_index(const Subset& I);

int binomial_coefficient(int n, int k);

}  // namespace mf
