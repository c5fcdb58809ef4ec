#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matchfield/exponents.hpp"
#include "matchfield/matching_field.hpp"
#include "matchfield/numeric.hpp"
#include "matchfield/subsets.hpp"

namespace mf {

/// Exact polynomial in K[x_ij]; no zero coefficients stored.
class XPolynomial {
 public:
  using Terms = std::map<ExponentMatrix, Int>;

  XPolynomial() = default;

  void add_term(const ExponentMatrix& m, const Int& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial operator*(const XPolynomial& o) const;
  XPolynomial scaled(const Int& c) const;

  std::string to_string() const;

  friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

 private:
  Terms terms_;
};

/// The Pluecker form P_I: determinant of the submatrix of X with rows
/// 1..|I| and columns I; |I|! signed terms.
XPolynomial plucker_form(int n, const Subset& I);

/// Image of a Pluecker monomial under the signed monomial map of the
/// matching field: sign = product of sgn(Lambda(I_j)), exponent = sum of
/// the chosen column exponents. The monomial is a multiset of subsets.
std::pair<int, ExponentMatrix> phi(const MatchingField& field, const std::vector<Subset>& monomial);

}  // namespace mf
