#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchfield/matching_field.hpp"
#include "matchfield/numeric.hpp"
#include "matchfield/subsets.hpp"
#include "matchfield/weights.hpp"
#include "matchfield/xpoly.hpp"

namespace mf {

/// Canonical order on subsets: by size, then lexicographic. This is the
/// variable order used everywhere (weight vectors, term order, printing).
bool canonical_subset_less(const Subset& a, const Subset& b);

/// Monomial in the Pluecker variables: a multiset of subsets.
struct PMonomial {
  std::vector<Subset> factors;  // kept sorted canonically

  PMonomial() = default;
  explicit PMonomial(std::vector<Subset> fs);

  int degree() const { return static_cast<int>(factors.size()); }
  std::string to_string(const MatchingField& field) const;  // arranged subscripts

  friend bool operator==(const PMonomial&, const PMonomial&) = default;
};

bool operator<(const PMonomial& a, const PMonomial& b);

/// c1 * lead + c2 * tail with c1, c2 in {+1,-1}; normalized so that lead
/// is the canonically smaller monomial and c1 = +1, which makes equality
/// of normalized forms the same as equality up to overall sign.
struct SignedBinomial {
  PMonomial lead, tail;
  int lead_coeff = 1, tail_coeff = 1;

  static SignedBinomial make(PMonomial a, int ca, PMonomial b, int cb);
  std::string to_string(const MatchingField& field) const;

  friend bool operator==(const SignedBinomial&, const SignedBinomial&) = default;
};

bool operator<(const SignedBinomial& a, const SignedBinomial& b);

/// Polynomial in the Pluecker variables with exact rational coefficients.
using PPolynomial = std::map<PMonomial, Rat>;

std::string to_string(const PPolynomial& f, const MatchingField& field);

/// All degree-2 monomials P_I P_J (unordered, repeats allowed), optionally
/// restricted to the Grassmannian |I| = |J| = k.
std::vector<PMonomial> degree2_monomials(int n, std::optional<int> grassmannian_k = {});

/// Degree-2 part of the matching field ideal: one binomial per unordered
/// pair of distinct monomials with equal exponent image, signs chosen so
/// the binomial lies in the kernel of the signed monomial map. Sorted.
std::vector<SignedBinomial> degree2_kernel(const MatchingField& field,
                                           std::optional<int> grassmannian_k = {});

Rat monomial_weight(const WeightVector& w, const PMonomial& m);

/// Sum of the terms of minimal total weight (min convention).
PPolynomial initial_form(const WeightVector& w, const PPolynomial& f);

/// Number of distinct exponent matrices among the degree-2 monomial
/// images; the dimension of the degree-2 slice of the initial algebra.
std::size_t dim_degree2_initial_algebra_serial(const MatchingField& field,
                                               std::optional<int> grassmannian_k = {});
std::size_t dim_degree2_initial_algebra_parallel(const MatchingField& field,
                                                 std::optional<int> grassmannian_k = {});
std::size_t dim_degree2_initial_algebra(const MatchingField& field,
                                        std::optional<int> grassmannian_k = {});

/// A degree-2 polynomial g in the Pluecker ideal (phi_n(g) = 0, verified
/// by exact expansion) whose initial form under w is exactly b. Support is
/// restricted to monomials with the same column content as b. Throws
/// NoLift when the rational linear system is infeasible.
PPolynomial lift_to_plucker_relation(const SignedBinomial& b, const WeightVector& w, int n);

/// Exact rank of the coefficient matrix of all expanded degree-2 products
/// phi_n(P_I P_J); fraction-free elimination over arbitrary-precision
/// integers.
std::size_t plucker_degree2_rank(int n, std::optional<int> grassmannian_k = {});

}  // namespace mf
