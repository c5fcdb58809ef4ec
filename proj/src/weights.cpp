#include "matchfield/weights.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchfield/assignment.hpp"
#include "matchfield/errors.hpp"
#include "matchfield/parallel.hpp"

namespace mf {

WeightMatrix weight_matrix_block(int n, int ell) {
  if (n < 2) throw std::out_of_range("weight_matrix_block: n must be >= 2");
  if (ell < 0 || ell > n) throw std::out_of_range("weight_matrix_block: ell must lie in [0, n]");
  WeightMatrix m;
  m.n = n;
  m.entries.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int j = 1; j <= ell; ++j) m.entries[1][j - 1] = ell - j + 1;       // ell, ..., 1
  for (int j = ell + 1; j <= n; ++j) m.entries[1][j - 1] = n + ell + 1 - j;  // n, ..., ell+1
  for (int i = 3; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.entries[i - 1][j - 1] = Rat(i - 1) * (n + 1 - j);
  return m;
}

namespace {

InitialTermReport make_report(const WeightMatrix& m, const Subset& I, Perm sigma) {
  InitialTermReport rep;
  rep.subset = I;
  rep.sign = sigma.sign();
  std::vector<int> col(I.size());
  for (int s = 1; s <= I.size(); ++s) col[sigma(s) - 1] = I.elems[s - 1];
  rep.exponent = ExponentMatrix::of_column(I.n, col);
  Rat w = 0;
  for (int s = 1; s <= I.size(); ++s) w += m.at(sigma(s), I.elems[s - 1]);
  rep.weight = w;
  rep.sigma = std::move(sigma);
  return rep;
}

}  // namespace

InitialTermReport initial_term_exhaustive(const WeightMatrix& m, const Subset& I) {
  const int k = I.size();
  std::vector<int> image(k);
  for (int i = 0; i < k; ++i) image[i] = i + 1;

  bool have_best = false;
  Rat best = 0, second = 0;
  bool have_second = false;
  Perm argmin;
  do {
    Rat w = 0;
    for (int s = 1; s <= k; ++s) w += m.at(image[s - 1], I.elems[s - 1]);
    if (!have_best || w < best) {
      if (have_best) {
        second = best;
        have_second = true;
      }
      best = w;
      argmin.image = image;
      have_best = true;
    } else if (!have_second || w < second) {
      second = w;
      have_second = true;
    }
  } while (std::next_permutation(image.begin(), image.end()));

  if (have_second && second == best)
    throw NonGenericWeight("initial_term: tie on subset " + I.to_string());
  return make_report(m, I, std::move(argmin));
}

InitialTermReport initial_term_assignment(const WeightMatrix& m, const Subset& I) {
  const int k = I.size();
  std::vector<std::vector<Rat>> cost(k, std::vector<Rat>(k));
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) cost[r][s] = m.at(r + 1, I.elems[s]);

  AssignmentResult opt = min_cost_assignment(cost);
  auto second = second_best_assignment(cost, opt.row_to_col);
  if (second && *second == opt.cost)
    throw NonGenericWeight("initial_term: tie on subset " + I.to_string());

  Perm sigma;
  sigma.image.assign(k, 0);
  for (int r = 0; r < k; ++r) sigma.image[opt.row_to_col[r]] = r + 1;
  return make_report(m, I, std::move(sigma));
}

InitialTermReport initial_term(const WeightMatrix& m, const Subset& I) {
  if (I.n != m.n) throw std::invalid_argument("initial_term: ambient size mismatch");
  return I.size() <= 8 ? initial_term_exhaustive(m, I) : initial_term_assignment(m, I);
}

InducesReport induces(const WeightMatrix& m, const MatchingField& field) {
  InducesReport rep;
  rep.induces = true;
  for (const Subset& I : all_proper_subsets(m.n)) {
    try {
      if (!(initial_term(m, I).sigma == field.sigma(I))) {
        rep.induces = false;
        rep.diagnostics.push_back("minimizer differs from the matching field on " + I.to_string());
      }
    } catch (const NonGenericWeight& e) {
      rep.induces = false;
      rep.diagnostics.push_back(e.what());
    }
  }
  return rep;
}

namespace {

struct SubsetVerdict {
  bool match = false;
  bool agree = false;
  std::string diagnostic;
};

SubsetVerdict check_subset(const WeightMatrix& m, const MatchingField& field, const Subset& I) {
  SubsetVerdict v;
  try {
    InitialTermReport slow = initial_term_exhaustive(m, I);
    InitialTermReport fast = initial_term_assignment(m, I);
    v.agree = slow.sigma == fast.sigma && slow.weight == fast.weight;
    if (!v.agree) v.diagnostic = "paths disagree on " + I.to_string();
    v.match = slow.sigma == field.sigma(I);
    if (!v.match && v.diagnostic.empty())
      v.diagnostic = "minimizer differs from the matching field on " + I.to_string();
  } catch (const NonGenericWeight& e) {
    v.diagnostic = e.what();
  }
  return v;
}

CoherenceScan collect(const std::vector<SubsetVerdict>& verdicts) {
  CoherenceScan scan;
  scan.induces = true;
  scan.paths_agree = true;
  for (const auto& v : verdicts) {
    scan.induces = scan.induces && v.match;
    scan.paths_agree = scan.paths_agree && v.agree;
    if (!v.diagnostic.empty()) scan.diagnostics.push_back(v.diagnostic);
  }
  return scan;
}

}  // namespace

CoherenceScan coherence_scan_serial(const WeightMatrix& m, const MatchingField& field) {
  auto subsets = all_proper_subsets(m.n);
  std::vector<SubsetVerdict> verdicts(subsets.size());
  for (size_t i = 0; i < subsets.size(); ++i) verdicts[i] = check_subset(m, field, subsets[i]);
  return collect(verdicts);
}

CoherenceScan coherence_scan_parallel(const WeightMatrix& m, const MatchingField& field) {
  auto subsets = all_proper_subsets(m.n);
  std::vector<SubsetVerdict> verdicts(subsets.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (long i = 0; i < static_cast<long>(subsets.size()); ++i)
    verdicts[i] = check_subset(m, field, subsets[i]);
  return collect(verdicts);
}

Rat WeightVector::at(const Subset& I) const {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), I,
                             [](const Subset& a, const Subset& b) {
                               if (a.size() != b.size()) return a.size() < b.size();
                               return a.elems < b.elems;
                             });
  if (it == subsets.end() || !(*it == I))
    throw std::invalid_argument("WeightVector::at: unknown subset " + I.to_string());
  return weights[it - subsets.begin()];
}

WeightVector weight_vector(const WeightMatrix& m) {
  WeightVector wv;
  wv.n = m.n;
  wv.subsets = all_proper_subsets(m.n);
  wv.weights.reserve(wv.subsets.size());
  for (const Subset& I : wv.subsets) wv.weights.push_back(initial_term(m, I).weight);
  return wv;
}

}  // namespace mf
