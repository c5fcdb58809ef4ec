#include "matchfield/tableau.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <stdexcept>

namespace mf {

int Tableau::row_count() const {
  size_t r = 0;
  for (const auto& c : columns) r = std::max(r, c.size());
  return static_cast<int>(r);
}

Subset Tableau::column_subset(int c) const {
  std::vector<int> elems = columns.at(c);
  std::sort(elems.begin(), elems.end());
  return Subset(n, std::move(elems));
}

bool Tableau::valid_for(const MatchingField& field) const {
  if (n != field.n()) return false;
  for (const auto& col : columns) {
    std::vector<int> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    if (!is_valid_subset(n, sorted)) return false;
    if (field.column(Subset(n, sorted)) != col) return false;
  }
  return true;
}

std::vector<std::vector<int>> Tableau::row_multisets() const {
  std::vector<std::vector<int>> rows(row_count());
  for (const auto& col : columns)
    for (size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
  for (auto& row : rows) std::sort(row.begin(), row.end());
  return rows;
}

static bool column_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

Tableau Tableau::canonical() const {
  Tableau t = *this;
  std::sort(t.columns.begin(), t.columns.end(), column_less);
  return t;
}

std::string Tableau::key() const {
  Tableau c = canonical();
  std::string k;
  for (const auto& col : c.columns) {
    for (int e : col) {
      k += std::to_string(e);
      k += ',';
    }
    k += ';';
  }
  return k;
}

bool operator==(const Tableau& a, const Tableau& b) {
  if (a.n != b.n) return false;
  return a.canonical().columns == b.canonical().columns;
}

bool operator<(const Tableau& a, const Tableau& b) {
  auto ca = a.canonical(), cb = b.canonical();
  return std::lexicographical_compare(ca.columns.begin(), ca.columns.end(),
                                      cb.columns.begin(), cb.columns.end(),
                                      column_less);
}

bool row_wise_equal(const Tableau& a, const Tableau& b) {
  if (a.n != b.n) throw std::invalid_argument("row_wise_equal: ambient size mismatch");
  return a.row_multisets() == b.row_multisets();
}

std::string row_signature(const Tableau& t) {
  std::string s;
  for (const auto& row : t.row_multisets()) {
    for (int e : row) {
      s += std::to_string(e);
      s += ',';
    }
    s += ';';
  }
  return s;
}

nlohmann::json Tableau::to_json() const {
  return nlohmann::json{{"n", n}, {"columns", columns}};
}

Tableau Tableau::from_json(const nlohmann::json& j) {
  Tableau t;
  t.n = j.at("n").get<int>();
  t.columns = j.at("columns").get<std::vector<std::vector<int>>>();
  return t;
}

std::string Tableau::to_string() const {
  std::string s = "[";
  for (size_t c = 0; c < columns.size(); ++c) {
    if (c) s += " ";
    s += "(";
    for (size_t r = 0; r < columns[c].size(); ++r) {
      if (r) s += ",";
      s += std::to_string(columns[c][r]);
    }
    s += ")";
  }
  s += "]";
  return s;
}

}  // namespace mf
