#pragma once

#include <string>

#include "matchfield/matching_field.hpp"
#include "matchfield/pideal.hpp"

namespace mf {

struct ReproduceResult {
  int exit_code = 0;  // 0 match, 2 mismatch, 64 unknown target
  std::string report;
};

/// Recomputes one of the embedded reference targets and diffs it against
/// the golden fixtures: "example-2-2", "example-2-3", "table-1",
/// "section-4-examples".
ReproduceResult reproduce(const std::string& target);

/// Parses "P23 P134 - P13 P234" into a normalized binomial; subscripts
/// are read in matching-field order and re-sorted per variable.
SignedBinomial parse_binomial(const std::string& text, int n);

}  // namespace mf
