#include "matchfield/pideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "matchfield/errors.hpp"
#include "matchfield/linalg.hpp"
#include "matchfield/parallel.hpp"

namespace mf {

bool canonical_subset_less(const Subset& a, const Subset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elems < b.elems;
}

PMonomial::PMonomial(std::vector<Subset> fs) : factors(std::move(fs)) {
  std::sort(factors.begin(), factors.end(), canonical_subset_less);
}

bool operator<(const PMonomial& a, const PMonomial& b) {
  return std::lexicographical_compare(a.factors.begin(), a.factors.end(),
                                      b.factors.begin(), b.factors.end(),
                                      canonical_subset_less);
}

static std::string variable_name(const MatchingField& field, const Subset& I) {
  std::vector<int> arranged = field.column(I);
  std::string s = "P";
  if (field.n() <= 9) {
    for (int e : arranged) s += std::to_string(e);
  } else {
    s += "[";
    for (size_t i = 0; i < arranged.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(arranged[i]);
    }
    s += "]";
  }
  return s;
}

std::string PMonomial::to_string(const MatchingField& field) const {
  std::string s;
  for (const Subset& I : factors) s += variable_name(field, I);
  return s.empty() ? "1" : s;
}

SignedBinomial SignedBinomial::make(PMonomial a, int ca, PMonomial b, int cb) {
  if (a == b) throw std::invalid_argument("SignedBinomial: terms must differ");
  SignedBinomial bi;
  if (b < a) {
    std::swap(a, b);
    std::swap(ca, cb);
  }
  bi.lead = std::move(a);
  bi.tail = std::move(b);
  bi.lead_coeff = 1;
  bi.tail_coeff = ca == cb ? 1 : -1;  // scale so the lead coefficient is +1
  if (ca != 1 && ca != -1) throw std::invalid_argument("SignedBinomial: coefficients must be +-1");
  return bi;
}

std::string SignedBinomial::to_string(const MatchingField& field) const {
  return lead.to_string(field) + (tail_coeff > 0 ? " + " : " - ") + tail.to_string(field);
}

bool operator<(const SignedBinomial& a, const SignedBinomial& b) {
  if (!(a.lead == b.lead)) return a.lead < b.lead;
  if (!(a.tail == b.tail)) return a.tail < b.tail;
  return a.tail_coeff < b.tail_coeff;
}

std::string to_string(const PPolynomial& f, const MatchingField& field) {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : f) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (a != 1) s += a.str() + "*";
    s += m.to_string(field);
  }
  return s;
}

std::vector<PMonomial> degree2_monomials(int n, std::optional<int> grassmannian_k) {
  std::vector<Subset> vars =
      grassmannian_k ? all_k_subsets(n, *grassmannian_k) : all_proper_subsets(n);
  std::vector<PMonomial> out;
  out.reserve(vars.size() * (vars.size() + 1) / 2);
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i; j < vars.size(); ++j) out.push_back(PMonomial({vars[i], vars[j]}));
  return out;
}

std::vector<SignedBinomial> degree2_kernel(const MatchingField& field,
                                           std::optional<int> grassmannian_k) {
  std::unordered_map<ExponentMatrix, std::vector<std::pair<PMonomial, int>>, ExponentMatrixHash>
      classes;
  for (PMonomial& m : degree2_monomials(field.n(), grassmannian_k)) {
    auto [sign, expo] = phi(field, m.factors);
    classes[expo].emplace_back(std::move(m), sign);
  }
  std::vector<SignedBinomial> out;
  for (auto& [expo, members] : classes) {
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        // c1*s1 + c2*s2 = 0 with c1 = 1 forces c2 = -s1*s2.
        int c2 = -members[i].second * members[j].second;
        out.push_back(SignedBinomial::make(members[i].first, 1, members[j].first, c2));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat monomial_weight(const WeightVector& w, const PMonomial& m) {
  Rat total = 0;
  for (const Subset& I : m.factors) total += w.at(I);
  return total;
}

PPolynomial initial_form(const WeightVector& w, const PPolynomial& f) {
  PPolynomial out;
  bool have_min = false;
  Rat min_weight = 0;
  for (const auto& [m, c] : f) {
    Rat weight = monomial_weight(w, m);
    if (!have_min || weight < min_weight) {
      min_weight = weight;
      have_min = true;
      out.clear();
      out.emplace(m, c);
    } else if (weight == min_weight) {
      out.emplace(m, c);
    }
  }
  return out;
}

namespace {

std::size_t count_distinct_images(const MatchingField& field, const std::vector<PMonomial>& ms,
                                  bool parallel) {
  std::vector<ExponentMatrix> images(ms.size());
  if (parallel) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (long i = 0; i < static_cast<long>(ms.size()); ++i)
      images[i] = phi(field, ms[i].factors).second;
  } else {
    for (size_t i = 0; i < ms.size(); ++i) images[i] = phi(field, ms[i].factors).second;
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images.size();
}

}  // namespace

std::size_t dim_degree2_initial_algebra_serial(const MatchingField& field,
                                               std::optional<int> grassmannian_k) {
  return count_distinct_images(field, degree2_monomials(field.n(), grassmannian_k), false);
}

std::size_t dim_degree2_initial_algebra_parallel(const MatchingField& field,
                                                 std::optional<int> grassmannian_k) {
  return count_distinct_images(field, degree2_monomials(field.n(), grassmannian_k), true);
}

std::size_t dim_degree2_initial_algebra(const MatchingField& field,
                                        std::optional<int> grassmannian_k) {
  return thread_count() > 1 ? dim_degree2_initial_algebra_parallel(field, grassmannian_k)
                            : dim_degree2_initial_algebra_serial(field, grassmannian_k);
}

namespace {

XPolynomial expand_monomial(int n, const PMonomial& m) {
  XPolynomial prod;
  prod.add_term(ExponentMatrix::zero(n), 1);
  for (const Subset& I : m.factors) prod = prod * plucker_form(n, I);
  return prod;
}

// Unordered pairs {K, L} of subsets with K and L disjointly covering the
// column content of `reference` (a multiset) and matching its sizes.
std::vector<PMonomial> content_splits(int n, const PMonomial& reference) {
  const Subset& A = reference.factors[0];
  const Subset& B = reference.factors[1];
  const size_t s = std::max(A.elems.size(), B.elems.size());

  std::vector<int> both, once;
  {
    std::vector<int> support = A.elems;
    support.insert(support.end(), B.elems.begin(), B.elems.end());
    std::sort(support.begin(), support.end());
    for (size_t i = 0; i < support.size();) {
      size_t j = i;
      while (j < support.size() && support[j] == support[i]) ++j;
      (j - i == 2 ? both : once).push_back(support[i]);
      i = j;
    }
  }

  std::vector<PMonomial> out;
  const size_t pick = s - both.size();  // elements of `once` that join K
  if (pick > once.size()) return out;
  std::vector<char> mask(once.size(), 0);
  std::fill(mask.begin(), mask.begin() + pick, 1);
  std::sort(mask.begin(), mask.end());
  do {
    std::vector<int> k_elems = both, l_elems = both;
    for (size_t i = 0; i < once.size(); ++i) (mask[i] ? k_elems : l_elems).push_back(once[i]);
    std::sort(k_elems.begin(), k_elems.end());
    std::sort(l_elems.begin(), l_elems.end());
    if (k_elems.empty() || l_elems.empty()) continue;
    if (static_cast<int>(k_elems.size()) >= n || static_cast<int>(l_elems.size()) >= n) continue;
    out.push_back(PMonomial({Subset(n, k_elems), Subset(n, l_elems)}));
  } while (std::next_permutation(mask.begin(), mask.end()));

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PPolynomial lift_to_plucker_relation(const SignedBinomial& b, const WeightVector& w, int n) {
  const Rat base_weight = monomial_weight(w, b.lead);
  if (monomial_weight(w, b.tail) != base_weight)
    throw std::invalid_argument("lift_to_plucker_relation: binomial terms must have equal weight");

  std::vector<PMonomial> unknowns;
  for (PMonomial& m : content_splits(n, b.lead)) {
    if (m == b.lead || m == b.tail) continue;
    if (monomial_weight(w, m) > base_weight) unknowns.push_back(std::move(m));
  }

  XPolynomial rhs = expand_monomial(n, b.lead).scaled(b.lead_coeff);
  rhs += expand_monomial(n, b.tail).scaled(b.tail_coeff);

  std::vector<XPolynomial> columns;
  columns.reserve(unknowns.size());
  for (const PMonomial& m : unknowns) columns.push_back(expand_monomial(n, m));

  // Row index: every x-monomial appearing anywhere in the system.
  std::map<ExponentMatrix, size_t> row_of;
  auto note_rows = [&row_of](const XPolynomial& p) {
    for (const auto& [expo, c] : p.terms()) row_of.emplace(expo, row_of.size());
  };
  note_rows(rhs);
  for (const auto& col : columns) note_rows(col);

  RatMatrix a(row_of.size(), columns.size());
  RatVector target(row_of.size(), Rat(0));
  for (const auto& [expo, c] : rhs.terms()) target[row_of[expo]] = -Rat(c);
  for (size_t j = 0; j < columns.size(); ++j)
    for (const auto& [expo, c] : columns[j].terms()) a.at(row_of[expo], j) = Rat(c);

  auto solution = solve_linear_system(a, target);
  if (!solution)
    throw NoLift("lift_to_plucker_relation: no Pluecker relation realizes " +
                 b.lead.to_string(MatchingField::diagonal(n)) + " class binomial");

  PPolynomial g;
  g.emplace(b.lead, Rat(b.lead_coeff));
  g.emplace(b.tail, Rat(b.tail_coeff));
  for (size_t j = 0; j < unknowns.size(); ++j)
    if ((*solution)[j] != 0) g.emplace(unknowns[j], (*solution)[j]);

  // The certificate is only as good as its checks: exact kernel membership
  // (denominators cleared first) and the initial form coming back out.
  Int denom_lcm = 1;
  for (const auto& [m, c] : g)
    denom_lcm = boost::multiprecision::lcm(denom_lcm, boost::multiprecision::denominator(c));
  XPolynomial check;
  for (const auto& [m, c] : g) {
    Rat scaled = c * denom_lcm;
    check += expand_monomial(n, m).scaled(boost::multiprecision::numerator(scaled));
  }
  if (!check.is_zero()) throw std::logic_error("lift check: candidate not in the Pluecker ideal");

  PPolynomial in_form = initial_form(w, g);
  PPolynomial expected;
  expected.emplace(b.lead, Rat(b.lead_coeff));
  expected.emplace(b.tail, Rat(b.tail_coeff));
  if (in_form != expected) throw std::logic_error("lift check: initial form is not the binomial");
  return g;
}

std::size_t plucker_degree2_rank(int n, std::optional<int> grassmannian_k) {
  std::map<ExponentMatrix, XPolynomial> pivots;  // keyed by leading exponent

  for (const PMonomial& m : degree2_monomials(n, grassmannian_k)) {
    XPolynomial row = expand_monomial(n, m);
    while (!row.is_zero()) {
      const auto& lead = row.terms().begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        // Normalize by the content to keep integer growth in check.
        Int g = 0;
        for (const auto& [expo, c] : row.terms()) g = boost::multiprecision::gcd(g, c);
        if (g > 1) {
          XPolynomial reduced;
          for (const auto& [expo, c] : row.terms()) reduced.add_term(expo, c / g);
          row = std::move(reduced);
        }
        pivots.emplace(lead, std::move(row));
        break;
      }
      const Int a = row.terms().begin()->second;
      const Int b = it->second.terms().begin()->second;
      const Int g = boost::multiprecision::gcd(a, b);
      row = row.scaled(b / g);
      row += it->second.scaled(-(a / g));
    }
  }
  return pivots.size();
}

}  // namespace mf
