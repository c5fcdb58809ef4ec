#pragma once

#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "matchfield/subsets.hpp"

namespace mf {

/// Permutation of {1..k}; image[s-1] = sigma(s).
struct Perm {
  std::vector<int> image;

  static Perm identity(int k);
  static Perm transposition12(int k);  // swaps 1 and 2, fixes the rest

  int degree() const { return static_cast<int>(image.size()); }
  int operator()(int s) const { return image[s - 1]; }
  int sign() const;
  bool is_identity() const;
  bool is_valid() const;

  friend bool operator==(const Perm&, const Perm&) = default;
};

enum class FieldKind { Diagonal, Block, Explicit };

/// The block diagonal rule for B_ell = (1..ell | ell+1..n): the column is
/// reordered by (12) exactly when it meets the first block in a single
/// element; columns inside one block stay sorted. This is the rule induced
/// by the weight matrices M_ell (ell = 0 and ell = n are the diagonal
/// field), which overrides the looser "otherwise (12)" phrasing some
/// sources use.
Perm block_diagonal_permutation(const Subset& I, int ell);

/// A matching field: one permutation per nonempty proper subset of [n].
class MatchingField {
 public:
  static MatchingField diagonal(int n);
  static MatchingField block(int n, int ell);
  /// Dense table indexed by subset_index(); must cover every subset and
  /// send singletons to the identity.
  static MatchingField explicit_table(int n, std::vector<Perm> table);

  int n() const { return n_; }
  FieldKind kind() const { return kind_; }
  int ell() const { return ell_; }  // meaningful for Block only

  Perm sigma(const Subset& I) const;
  int sign(const Subset& I) const;

  /// Entries of I arranged by sigma(I): position sigma(s) holds i_s,
  /// read top to bottom. column({2,4}) under B_3 in [4] is (4,2).
  std::vector<int> column(const Subset& I) const;

  /// Arrangement of an unordered element list (sorted internally).
  std::vector<int> arrange(std::vector<int> elems) const;

  nlohmann::json to_json() const;
  static MatchingField from_json(const nlohmann::json& j);

 private:
  MatchingField(int n, FieldKind kind, int ell, std::vector<Perm> table);

  int n_;
  FieldKind kind_;
  int ell_;
  std::vector<Perm> table_;  // Explicit only
};

}  // namespace mf
