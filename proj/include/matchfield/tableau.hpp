#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "matchfield/matching_field.hpp"

namespace mf {

/// A tableau: columns side by side, each an arranged subset of [n].
/// Column order never matters (P^T is a commutative monomial), so
/// comparisons go through the canonical form: columns sorted by length
/// descending, then lexicographically on the arranged entries.
struct Tableau {
  int n = 0;
  std::vector<std::vector<int>> columns;

  Tableau() = default;
  Tableau(int ambient, std::vector<std::vector<int>> cols)
      : n(ambient), columns(std::move(cols)) {}

  int column_count() const { return static_cast<int>(columns.size()); }
  int row_count() const;

  /// Content of column c as a Subset (entries re-sorted).
  Subset column_subset(int c) const;

  /// Every column a matching-field-arranged nonempty proper subset.
  bool valid_for(const MatchingField& field) const;

  /// r-th multiset (sorted vector), entries of row r across all columns
  /// that reach that row.
  std::vector<std::vector<int>> row_multisets() const;

  Tableau canonical() const;
  std::string key() const;  // canonical encoding, usable as a hash key

  nlohmann::json to_json() const;
  static Tableau from_json(const nlohmann::json& j);
  std::string to_string() const;
};

bool operator==(const Tableau& a, const Tableau& b);
bool operator<(const Tableau& a, const Tableau& b);  // on canonical forms

bool row_wise_equal(const Tableau& a, const Tableau& b);

/// Key identifying the row-wise equality class.
std::string row_signature(const Tableau& t);

}  // namespace mf
