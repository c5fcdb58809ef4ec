#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchfield/tableau.hpp"

namespace mf {

/// Types of rectangular two-column tableaux in the Grassmannian basis
/// family. 3B carries the break row r, 3C/3D the first-block prefix s.
enum class GrType { T1, T2, T3A, T3B, T3C, T3D, NotInBasis };

struct GrClassification {
  GrType type = GrType::NotInBasis;
  int param = 0;               // r for 3B, s for 3C/3D
  int break_row = 0;           // last row swapped by the map (3B/3C/3D)
  std::vector<int> left;       // arranged column playing I
  std::vector<int> right;      // arranged column playing J
  std::string tag() const;     // "1", "2", "3A", "3B(3)", ...
  bool in_basis() const { return type != GrType::NotInBasis; }
};

/// Two-column semi-standard tableau: rows weakly increase, columns
/// strictly increase; the left column is the longer one.
struct SSYT {
  int n = 0;
  std::vector<int> left, right;

  bool valid() const;
  Tableau as_tableau() const;
  std::string to_string() const;

  friend bool operator==(const SSYT&, const SSYT&) = default;
  auto operator<=>(const SSYT&) const = default;
};

/// Classify a rectangular two-column tableau (columns of equal size,
/// both matching-field-arranged for B_ell) against the typed family.
GrClassification classify_gr(const Tableau& t, int ell);

/// The per-type rearrangement onto semi-standard tableaux; a bijection
/// from the typed family onto rectangular two-column semi-standard
/// tableaux. Throws std::invalid_argument on NotInBasis input.
SSYT s_gr(const Tableau& t, int ell);
Tableau s_gr_inverse(const SSYT& u, int ell);

enum class FlagCategory { Rectangular, Extended, SingleRight, NotInBasis };

struct FlagClassification {
  FlagCategory category = FlagCategory::NotInBasis;
  GrClassification gr;  // Rectangular: the tableau itself; Extended: its top block
  std::string single;   // SingleRight: "3A(1)", "3A(2)", "3B", "3C", "3D"
  std::string tag() const;  // "1.2", "2.3B(3)", "3D", "NotInBasis"
  bool in_basis() const { return category != FlagCategory::NotInBasis; }
};

/// Classify an arbitrary two-column tableau (shape s >= t >= 1).
FlagClassification classify_flag(const Tableau& t, int ell);

SSYT s_flag(const Tableau& t, int ell);
Tableau s_flag_inverse(const SSYT& u, int ell);

bool in_basis(const Tableau& t, int ell);

/// The unique basis member row-wise equal to T; identity on members.
Tableau normalize_to_basis(const Tableau& t, int ell);

/// Oracle enumerations used by the exhaustive checks.
std::vector<SSYT> all_ssyt(int n, int s, int t);
std::vector<Tableau> all_two_column_tableaux(int n, int ell, int s, int t);

}  // namespace mf
