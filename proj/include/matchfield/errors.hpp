#pragma once

#include <stdexcept>
#include <string>

namespace mf {

/// Two permutations tie for the minimum weight: the matrix does not
/// induce a matching field on the offending subset.
struct NonGenericWeight : std::runtime_error {
  explicit NonGenericWeight(const std::string& what) : std::runtime_error(what) {}
};

struct NotRowWiseEqual : std::invalid_argument {
  explicit NotRowWiseEqual(const std::string& what) : std::invalid_argument(what) {}
};

/// A degree-2 kernel binomial admits no lift to a Pluecker relation;
/// signals SAGBI failure at degree 2.
struct NoLift : std::runtime_error {
  explicit NoLift(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mf
