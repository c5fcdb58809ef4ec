#pragma once

#include <optional>
#include <vector>

#include "matchfield/numeric.hpp"

namespace mf {

using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

/// Dense rational matrix, row major.
struct RatMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Rat> data;

  RatMatrix() = default;
  RatMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, Rat(0)) {}

  Rat& at(size_t r, size_t c) { return data[r * cols + c]; }
  const Rat& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

/// Any solution x of A x = b, or nullopt when inconsistent.
std::optional<RatVector> solve_linear_system(const RatMatrix& a, const RatVector& b);

size_t rational_rank(RatMatrix a);

/// Inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> invert(const RatMatrix& a);

/// Rank of a set of integer vectors (rows), fraction-free.
size_t integer_row_rank(std::vector<IntVector> rows);

/// Divide by the gcd of the entries and flip so the first nonzero entry
/// is positive; the zero vector stays zero.
void make_primitive(IntVector& v);

/// Clear denominators and reduce to a primitive integer vector.
IntVector primitive_integer(const RatVector& v);

}  // namespace mf
