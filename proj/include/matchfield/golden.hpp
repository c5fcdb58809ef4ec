#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mf::golden {

// Fixture data for the reproduce targets, transcribed from the source
// tables. Version: 1 (bump when a transcription is corrected).

struct FVectorRow {
  int n;
  std::vector<int> ells;  // the table groups some ells into one row
  std::vector<std::size_t> f;
};

inline const std::vector<FVectorRow>& table1() {
  static const std::vector<FVectorRow> rows = {
      {3, {0, 1, 2}, {6, 13, 13, 6}},
      {4, {0}, {14, 71, 186, 287, 275, 165, 60, 12}},
      {4, {1}, {14, 71, 188, 296, 291, 179, 66, 13}},
      {4, {2, 3}, {14, 71, 189, 301, 301, 189, 71, 14}},
      {5, {0}, {30, 305, 1595, 5097, 10872, 16261, 17523, 13770, 7888, 3251, 936, 178, 20}},
      {5, {1}, {30, 305, 1622, 5332, 11777, 18292, 20464, 16640, 9798, 4106, 1182, 219, 23}},
      {5, {2}, {30, 305, 1634, 5446, 12255, 19458, 22297, 18580, 11197, 4784, 1393, 257, 26}},
      {5, {3, 4}, {30, 305, 1626, 5378, 11997, 18883, 21464, 17761, 10644, 4531, 1318, 244, 25}},
  };
  return rows;
}

// Example with n = 4, ell = 3: the printed weight matrix, the arranged
// single-column tableaux in variable order, and the two weight vectors.
inline const std::vector<std::vector<long>>& example22_matrix() {
  static const std::vector<std::vector<long>> m = {
      {0, 0, 0, 0}, {3, 2, 1, 4}, {8, 6, 4, 2}, {12, 9, 6, 3}};
  return m;
}

inline const std::vector<std::vector<int>>& example22_columns() {
  static const std::vector<std::vector<int>> cols = {
      {1}, {2}, {3}, {4}, {1, 2}, {1, 3}, {4, 1}, {2, 3}, {4, 2}, {4, 3},
      {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  return cols;
}

inline const std::vector<long>& example23_weight_vector_n4() {
  static const std::vector<long> w = {0, 0, 0, 0, 2, 1, 3, 1, 2, 1, 6, 4, 3, 3};
  return w;
}

inline const std::vector<long>& example23_weight_vector_n3() {
  static const std::vector<long> w = {0, 0, 0, 2, 1, 1};
  return w;
}

struct GeneratorRow {
  std::string text;  // verbatim, subscripts in matching-field order
  bool disputed;     // printed with a repeated factor; flagged, not asserted
};

inline const std::vector<GeneratorRow>& example23_generators() {
  static const std::vector<GeneratorRow> g = {
      {"P23 P134 - P13 P234", false},
      {"P43 P124 - P42 P134", false},
      {"P23 P124 - P12 P234", false},
      {"P13 P124 - P12 P134", false},
      {"P13 P43 - P12 P43", true},
      {"P2 P134 - P1 P234", false},
      {"P4 P23 + P2 P43", false},
      {"P4 P13 + P1 P43", false},
      {"P2 P13 - P1 P23", false},
      {"P4 P12 + P1 P42", false},
  };
  return g;
}

// The n = 3 table: weight vectors for P1,P2,P3,P12,P13,P23 and the
// degree-2 initial ideal generator for each ell.
struct SmallTableRow {
  int ell;
  std::vector<long> weights;
  std::string generator;
};

inline const std::vector<SmallTableRow>& n3_table() {
  static const std::vector<SmallTableRow> rows = {
      {0, {0, 0, 0, 2, 1, 1}, "P1 P23 - P2 P13"},
      {1, {0, 0, 0, 1, 1, 2}, "P3 P12 - P2 P13"},
      {2, {0, 0, 0, 1, 2, 1}, "P1 P23 + P3 P12"},
  };
  return rows;
}

}  // namespace mf::golden
