#include "matchfield/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace mf {

bool is_valid_subset(int n, const std::vector<int>& elems) {
  if (n < 1) return false;
  if (elems.empty() || static_cast<int>(elems.size()) >= n) return false;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > n) return false;
    if (i > 0 && elems[i] <= elems[i - 1]) return false;
  }
  return true;
}

Subset::Subset(int ambient, std::vector<int> elements)
    : n(ambient), elems(std::move(elements)) {
  if (!is_valid_subset(n, elems))
    throw std::invalid_argument("Subset: need a nonempty proper strictly increasing subset of [n]");
}

bool Subset::contains(int e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

int Subset::count_leading_block(int ell) const {
  int c = 0;
  for (int e : elems)
    if (e <= ell) ++c;
  return c;
}

std::string Subset::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elems[i]);
  }
  s += "}";
  return s;
}

int binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

std::vector<Subset> all_k_subsets(int n, int k) {
  std::vector<Subset> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Subset> all_proper_subsets(int n) {
  std::vector<Subset> out;
  for (int k = 1; k <= n - 1; ++k) {
    auto sz = all_k_subsets(n, k);
    out.insert(out.end(), sz.begin(), sz.end());
  }
  return out;
}

int subset_index(const Subset& I) {
  const int n = I.n, k = I.size();
  int idx = 0;
  for (int j = 1; j < k; ++j) idx += binomial_coefficient(n, j);
  // lexicographic rank among k-subsets of [n]
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int e = prev + 1; e < I.elems[i]; ++e)
      idx += binomial_coefficient(n - e, k - 1 - i);
    prev = I.elems[i];
  }
  return idx;
}

}  // namespace mf
