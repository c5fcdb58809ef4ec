#include "matchfield/matching_field.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <map>
#include <stdexcept>

namespace mf {

Perm Perm::identity(int k) {
  Perm p;
  p.image.resize(k);
  for (int i = 0; i < k; ++i) p.image[i] = i + 1;
  return p;
}

Perm Perm::transposition12(int k) {
  if (k < 2) throw std::invalid_argument("transposition12: degree must be >= 2");
  Perm p = identity(k);
  std::swap(p.image[0], p.image[1]);
  return p;
}

bool Perm::is_valid() const {
  std::vector<char> seen(image.size(), 0);
  for (int v : image) {
    if (v < 1 || v > degree() || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image[i] != i + 1) return false;
  return true;
}

int Perm::sign() const {
  int inversions = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (image[i] > image[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Perm block_diagonal_permutation(const Subset& I, int ell) {
  if (ell < 0 || ell > I.n)
    throw std::out_of_range("block_diagonal_permutation: ell must lie in [0, n]");
  if (I.size() >= 2 && I.count_leading_block(ell) == 1)
    return Perm::transposition12(I.size());
  return Perm::identity(I.size());
}

MatchingField::MatchingField(int n, FieldKind kind, int ell, std::vector<Perm> table)
    : n_(n), kind_(kind), ell_(ell), table_(std::move(table)) {
  if (n_ < 1) throw std::invalid_argument("MatchingField: n must be positive");
}

MatchingField MatchingField::diagonal(int n) {
  return MatchingField(n, FieldKind::Diagonal, 0, {});
}

MatchingField MatchingField::block(int n, int ell) {
  if (ell < 0 || ell > n)
    throw std::out_of_range("MatchingField::block: ell must lie in [0, n]");
  return MatchingField(n, FieldKind::Block, ell, {});
}

MatchingField MatchingField::explicit_table(int n, std::vector<Perm> table) {
  auto subsets = all_proper_subsets(n);
  if (table.size() != subsets.size())
    throw std::invalid_argument("MatchingField::explicit_table: table must cover every proper subset");
  for (size_t i = 0; i < subsets.size(); ++i) {
    if (table[i].degree() != subsets[i].size() || !table[i].is_valid())
      throw std::invalid_argument("MatchingField::explicit_table: bad permutation for " +
                                  subsets[i].to_string());
    if (subsets[i].size() == 1 && !table[i].is_identity())
      throw std::invalid_argument("MatchingField::explicit_table: singletons must map to id");
  }
  return MatchingField(n, FieldKind::Explicit, 0, std::move(table));
}

Perm MatchingField::sigma(const Subset& I) const {
  if (I.n != n_) throw std::invalid_argument("MatchingField::sigma: ambient size mismatch");
  switch (kind_) {
    case FieldKind::Diagonal: return Perm::identity(I.size());
    case FieldKind::Block: return block_diagonal_permutation(I, ell_);
    case FieldKind::Explicit: return table_[subset_index(I)];
  }
  throw std::logic_error("unreachable");
}

int MatchingField::sign(const Subset& I) const { return sigma(I).sign(); }

std::vector<int> MatchingField::column(const Subset& I) const {
  Perm s = sigma(I);
  std::vector<int> col(I.size());
  for (int i = 1; i <= I.size(); ++i) col[s(i) - 1] = I.elems[i - 1];
  return col;
}

std::vector<int> MatchingField::arrange(std::vector<int> elems) const {
  std::sort(elems.begin(), elems.end());
  return column(Subset(n_, std::move(elems)));
}

nlohmann::json MatchingField::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  switch (kind_) {
    case FieldKind::Diagonal: j["kind"] = "diagonal"; break;
    case FieldKind::Block:
      j["kind"] = "block";
      j["ell"] = ell_;
      break;
    case FieldKind::Explicit: {
      j["kind"] = "explicit";
      nlohmann::json table = nlohmann::json::object();
      auto subsets = all_proper_subsets(n_);
      for (size_t i = 0; i < subsets.size(); ++i) {
        std::string key;
        for (size_t t = 0; t < subsets[i].elems.size(); ++t) {
          if (t) key += ",";
          key += std::to_string(subsets[i].elems[t]);
        }
        table[key] = table_[i].image;
      }
      j["table"] = std::move(table);
      break;
    }
  }
  return j;
}

MatchingField MatchingField::from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "diagonal") return diagonal(n);
  if (kind == "block") return block(n, j.at("ell").get<int>());
  if (kind == "explicit") {
    auto subsets = all_proper_subsets(n);
    std::vector<Perm> table(subsets.size());
    const auto& tj = j.at("table");
    for (size_t i = 0; i < subsets.size(); ++i) {
      std::string key;
      for (size_t t = 0; t < subsets[i].elems.size(); ++t) {
        if (t) key += ",";
        key += std::to_string(subsets[i].elems[t]);
      }
      Perm p;
      p.image = tj.at(key).get<std::vector<int>>();
      table[i] = std::move(p);
    }
    return explicit_table(n, std::move(table));
  }
  throw std::invalid_argument("MatchingField::from_json: unknown kind '" + kind + "'");
}

}  // namespace mf
