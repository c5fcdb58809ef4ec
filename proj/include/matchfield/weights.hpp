#pragma once

#include <string>
#include <vector>

#include "matchfield/exponents.hpp"
#include "matchfield/matching_field.hpp"
#include "matchfield/numeric.hpp"
#include "matchfield/subsets.hpp"

namespace mf {

/// n x n matrix of exact rational weights; entry (i,j) weighs x_ij.
struct WeightMatrix {
  int n = 0;
  std::vector<std::vector<Rat>> entries;  // 1-based via at()

  Rat at(int i, int j) const { return entries[i - 1][j - 1]; }
};

/// The weight matrix M_ell: zero first row, second row
/// (ell, ell-1, ..., 1, n, n-1, ..., ell+1), and row i >= 3 equal to
/// (i-1)(n+1-j) in column j. Validated against every matrix the source
/// data prints (n=3 all ell, and the n=4, ell=3 instance).
WeightMatrix weight_matrix_block(int n, int ell);

struct InitialTermReport {
  Subset subset;
  Perm sigma;  // the unique minimizer
  Rat weight;
  int sign = 1;  // sign of sigma
  ExponentMatrix exponent;
};

/// Minimum-weight term of the Pluecker form P_I under M (min convention);
/// throws NonGenericWeight when two permutations tie.
InitialTermReport initial_term(const WeightMatrix& m, const Subset& I);

/// Reference path: enumerate all |I|! permutations.
InitialTermReport initial_term_exhaustive(const WeightMatrix& m, const Subset& I);

/// Fast path: exact min-cost assignment plus a second-best probe for
/// tie detection.
InitialTermReport initial_term_assignment(const WeightMatrix& m, const Subset& I);

struct InducesReport {
  bool induces = false;
  std::vector<std::string> diagnostics;  // offending subsets, ties
};

/// Does M induce the matching field? Ties are reported, not thrown.
InducesReport induces(const WeightMatrix& m, const MatchingField& field);

struct CoherenceScan {
  bool induces = false;
  bool paths_agree = false;  // exhaustive vs assignment on every subset
  std::vector<std::string> diagnostics;
};

/// Runs both initial-term paths on every subset and compares them; the
/// OpenMP variant fans out over subsets.
CoherenceScan coherence_scan_serial(const WeightMatrix& m, const MatchingField& field);
CoherenceScan coherence_scan_parallel(const WeightMatrix& m, const MatchingField& field);

/// Weight vector induced by M on the Pluecker variables, in canonical
/// subset order (size, then lexicographic).
struct WeightVector {
  int n = 0;
  std::vector<Subset> subsets;
  std::vector<Rat> weights;

  Rat at(const Subset& I) const;
};

WeightVector weight_vector(const WeightMatrix& m);

}  // namespace mf
