#include "matchfield/swaps.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "matchfield/errors.hpp"

namespace mf {

std::vector<Tableau> enumerate_swaps(const Tableau& t, const MatchingField& field) {
  // A swap rewrites exactly two columns while keeping every row multiset;
  // the rewritten pairs are precisely the row class of the two columns.
  // Exchanging a single row at a time is not enough: for the diagonal
  // field on [4], (234|12) and (124|23) differ by one swap although both
  // single-row exchanges pass through repeated entries.
  std::vector<Tableau> out;
  const int cols = t.column_count();
  for (int i = 0; i < cols; ++i) {
    for (int j = i + 1; j < cols; ++j) {
      Tableau pair(t.n, {t.columns[i], t.columns[j]});
      for (const Tableau& rewrite : row_class(pair, field)) {
        if (rewrite == pair) continue;
        Tableau cand = t;
        cand.columns[i] = rewrite.columns[0];
        cand.columns[j] = rewrite.columns[1];
        Tableau canon = cand.canonical();
        if (canon == t) continue;
        out.push_back(std::move(canon));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuadEquivResult quadratic_equivalent(const Tableau& lhs, const Tableau& rhs,
                                     const MatchingField& field) {
  if (!row_wise_equal(lhs, rhs))
    throw NotRowWiseEqual("quadratic_equivalent: tableaux are not row-wise equal");

  QuadEquivResult res;
  const Tableau start = lhs.canonical();
  const Tableau goal = rhs.canonical();
  const std::string goal_key = goal.key();

  std::unordered_map<std::string, std::string> parent;  // key -> predecessor key
  std::unordered_map<std::string, Tableau> seen;
  std::deque<std::string> frontier;

  const std::string start_key = start.key();
  seen.emplace(start_key, start);
  parent.emplace(start_key, std::string{});
  frontier.push_back(start_key);

  bool found = start_key == goal_key;
  while (!found && !frontier.empty()) {
    const std::string cur_key = frontier.front();
    frontier.pop_front();
    const Tableau cur = seen.at(cur_key);
    for (const Tableau& nb : enumerate_swaps(cur, field)) {  // already sorted
      std::string k = nb.key();
      if (seen.count(k)) continue;
      seen.emplace(k, nb);
      parent.emplace(k, cur_key);
      if (k == goal_key) {
        found = true;
        break;
      }
      frontier.push_back(std::move(k));
    }
  }

  res.explored = seen.size();
  res.equivalent = found;
  if (found) {
    std::vector<Tableau> rev;
    for (std::string k = goal_key; !k.empty(); k = parent.at(k)) rev.push_back(seen.at(k));
    res.path.assign(rev.rbegin(), rev.rend());
  }
  return res;
}

std::vector<Tableau> row_class(const Tableau& t, const MatchingField& field) {
  const auto rows = t.row_multisets();
  const int depth = static_cast<int>(rows.size());

  // Column lengths are forced by the row sizes.
  std::vector<int> lengths;
  for (const auto& col : t.columns) lengths.push_back(static_cast<int>(col.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  const int cols = static_cast<int>(lengths.size());

  std::set<Tableau> out;
  std::vector<std::vector<int>> contents(cols);

  auto recurse = [&](auto&& self, int r) -> void {
    if (r == depth) {
      Tableau cand;
      cand.n = t.n;
      for (const auto& c : contents) {
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        cand.columns.push_back(field.column(Subset(t.n, std::move(sorted))));
      }
      if (cand.row_multisets() == rows) out.insert(cand.canonical());
      return;
    }
    int active = 0;
    while (active < cols && lengths[active] > r) ++active;
    std::vector<int> perm = rows[r];  // sorted; next_permutation covers distinct orders
    do {
      bool ok = true;
      for (int c = 0; c < active && ok; ++c)
        ok = std::find(contents[c].begin(), contents[c].end(), perm[c]) == contents[c].end();
      if (ok) {
        for (int c = 0; c < active; ++c) contents[c].push_back(perm[c]);
        self(self, r + 1);
        for (int c = 0; c < active; ++c) contents[c].pop_back();
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  recurse(recurse, 0);

  return {out.begin(), out.end()};
}

bool class_connected(const std::vector<Tableau>& members, const MatchingField& field) {
  if (members.size() <= 1) return true;
  std::unordered_set<std::string> want;
  for (const auto& m : members) want.insert(m.key());

  std::unordered_set<std::string> seen;
  std::deque<Tableau> frontier;
  frontier.push_back(members.front().canonical());
  seen.insert(members.front().key());
  while (!frontier.empty() && seen.size() < want.size()) {
    Tableau cur = std::move(frontier.front());
    frontier.pop_front();
    for (Tableau& nb : enumerate_swaps(cur, field)) {
      std::string k = nb.key();
      if (!want.count(k) || seen.count(k)) continue;
      seen.insert(std::move(k));
      frontier.push_back(std::move(nb));
    }
  }
  return seen.size() == want.size();
}

}  // namespace mf
