#include "matchfield/xpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mf {

void XPolynomial::add_term(const ExponentMatrix& m, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

XPolynomial XPolynomial::operator*(const XPolynomial& o) const {
  XPolynomial prod;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      ExponentMatrix m = ma;
      m += mb;
      prod.add_term(m, ca * cb);
    }
  return prod;
}

XPolynomial XPolynomial::scaled(const Int& c) const {
  XPolynomial out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

std::string XPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += c >= 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    Int a = c < 0 ? Int(-c) : c;
    if (a != 1) s += a.str();
    s += m.to_string();
  }
  return s;
}

XPolynomial plucker_form(int n, const Subset& I) {
  if (I.n != n) throw std::invalid_argument("plucker_form: ambient size mismatch");
  const int k = I.size();
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = i + 1;

  XPolynomial p;
  do {
    ExponentMatrix m = ExponentMatrix::zero(n);
    int inversions = 0;
    for (int s = 0; s < k; ++s) {
      m.at(rows[s], I.elems[s]) += 1;
      for (int t = s + 1; t < k; ++t)
        if (rows[s] > rows[t]) ++inversions;
    }
    p.add_term(m, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(rows.begin(), rows.end()));
  return p;
}

std::pair<int, ExponentMatrix> phi(const MatchingField& field, const std::vector<Subset>& monomial) {
  int sign = 1;
  ExponentMatrix sum = ExponentMatrix::zero(field.n());
  for (const Subset& I : monomial) {
    sign *= field.sign(I);
    sum += ExponentMatrix::of_column(field.n(), field.column(I));
  }
  return {sign, sum};
}

}  // namespace mf
