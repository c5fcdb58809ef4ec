#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "matchfield/errors.hpp"
#include "matchfield/matching_field.hpp"
#include "matchfield/subsets.hpp"
#include "matchfield/swaps.hpp"
#include "matchfield/tableau.hpp"

using namespace mf;

TEST_CASE("subset enumeration and ranking") {
  for (int n = 2; n <= 8; ++n) {
    auto subsets = all_proper_subsets(n);
    CHECK(subsets.size() == (size_t(1) << n) - 2);
    for (size_t i = 0; i < subsets.size(); ++i)
      CHECK(subset_index(subsets[i]) == static_cast<int>(i));
  }
  CHECK_THROWS(Subset(4, {1, 2, 3, 4}));  // not proper
  CHECK_THROWS(Subset(4, {}));
  CHECK_THROWS(Subset(4, {2, 2}));
  CHECK_THROWS(Subset(4, {3, 1}));
}

TEST_CASE("block diagonal rule") {
  // identity exactly when the column misses the first block or meets it
  // at least twice; singletons always identity
  CHECK(block_diagonal_permutation(Subset(4, {2, 4}), 3) == Perm::transposition12(2));
  CHECK(block_diagonal_permutation(Subset(4, {1, 3}), 3) == Perm::identity(2));
  CHECK(block_diagonal_permutation(Subset(6, {5}), 2) == Perm::identity(1));
  CHECK_THROWS_AS(block_diagonal_permutation(Subset(4, {1, 2}), 5), std::out_of_range);

  for (int n = 2; n <= 8; ++n) {
    for (int ell = 0; ell <= n; ++ell) {
      for (const Subset& I : all_proper_subsets(n)) {
        Perm p = block_diagonal_permutation(I, ell);
        const int hits = I.count_leading_block(ell);
        const bool expect_id = I.size() == 1 || hits >= 2 || hits == 0;
        CHECK(p.is_identity() == expect_id);
        if (!expect_id) CHECK(p == Perm::transposition12(I.size()));
      }
    }
  }
}

TEST_CASE("columns and signs") {
  MatchingField b3 = MatchingField::block(4, 3);
  CHECK(b3.column(Subset(4, {2, 4})) == std::vector<int>{4, 2});
  CHECK(b3.column(Subset(4, {1, 2, 4})) == std::vector<int>{1, 2, 4});
  CHECK(b3.sign(Subset(4, {2, 4})) == -1);
  CHECK(b3.sign(Subset(4, {1, 3})) == 1);
  CHECK(b3.sign(Subset(4, {2})) == 1);

  MatchingField diag = MatchingField::diagonal(7);
  CHECK(diag.column(Subset(7, {2, 5, 7})) == std::vector<int>{2, 5, 7});

  // sorted column content always recovers the subset
  MatchingField b2 = MatchingField::block(6, 2);
  for (const Subset& I : all_proper_subsets(6)) {
    auto col = b2.column(I);
    std::sort(col.begin(), col.end());
    CHECK(col == I.elems);
  }
}

TEST_CASE("matching field json round trip") {
  MatchingField b2 = MatchingField::block(5, 2);
  MatchingField back = MatchingField::from_json(b2.to_json());
  CHECK(back.kind() == FieldKind::Block);
  CHECK(back.ell() == 2);

  // explicit field: same rule stored as a dense table
  auto subsets = all_proper_subsets(4);
  std::vector<Perm> table;
  for (const Subset& I : subsets) table.push_back(block_diagonal_permutation(I, 1));
  MatchingField ex = MatchingField::explicit_table(4, table);
  MatchingField ex_back = MatchingField::from_json(ex.to_json());
  for (const Subset& I : subsets) CHECK(ex_back.sigma(I) == ex.sigma(I));
}

TEST_CASE("row multisets of the six-column example") {
  // six columns over [6] arranged for B_3 = (123|456)
  MatchingField field = MatchingField::block(6, 3);
  Tableau t(6, {{1}, {4, 1, 6}, {2, 3, 5, 6}, {5, 2}, {2, 3, 4, 5}, {4, 2, 5, 6}});
  REQUIRE(t.valid_for(field));
  auto rows = t.row_multisets();
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<int>{1, 2, 2, 4, 4, 5});  // sorted {1,4,2,5,2,4}
  CHECK(rows[1] == std::vector<int>{1, 2, 2, 3, 3});
  CHECK(rows[2] == std::vector<int>{4, 5, 5, 6});
  CHECK(rows[3] == std::vector<int>{5, 6, 6});

  Tableau single(6, {{1, 3}});
  auto srows = single.row_multisets();
  CHECK(srows == std::vector<std::vector<int>>{{1}, {3}});
  CHECK(Tableau(6, {}).row_multisets().empty());
}

TEST_CASE("row-wise equality") {
  MatchingField field = MatchingField::block(6, 3);
  Tableau t(6, {{1}, {4, 1, 6}, {2, 3, 5, 6}, {5, 2}, {2, 3, 4, 5}, {4, 2, 5, 6}});
  Tableau t2(6, {{1, 2, 4, 5}, {2, 3, 5, 6}, {2, 3}, {5}, {4, 1, 5, 6}, {4, 2, 6}});
  REQUIRE(t2.valid_for(field));
  CHECK(row_wise_equal(t, t2));
  CHECK(row_wise_equal(t, t));
  CHECK_FALSE(row_wise_equal(Tableau(3, {{1, 2}}), Tableau(3, {{1, 3}})));
}

TEST_CASE("tableau json and canonical form") {
  Tableau t(4, {{4, 2}, {1}});
  Tableau back = Tableau::from_json(t.to_json());
  CHECK(back == t);
  CHECK(Tableau(4, {{1}, {4, 2}}) == t);  // column order immaterial
  CHECK(nlohmann::json::parse(R"({"n":4,"columns":[[4,2],[1]]})") == t.to_json());
}

TEST_CASE("explicit matching field of the three-column counterexample") {
  // only the columns of T and T' are ordered naturally; all other pairs
  // are reversed
  const int n = 6;
  auto subsets = all_proper_subsets(n);
  std::vector<Perm> table;
  const std::vector<std::vector<int>> natural = {{1, 4}, {2, 5}, {3, 6}, {3, 4}, {1, 5}, {2, 6}};
  for (const Subset& I : subsets) {
    bool is_natural = false;
    for (const auto& cols : natural)
      if (I.elems == cols) is_natural = true;
    if (I.size() == 1 || is_natural)
      table.push_back(Perm::identity(I.size()));
    else
      table.push_back(Perm::transposition12(I.size()));
  }
  MatchingField field = MatchingField::explicit_table(n, table);

  Tableau t(n, {{1, 4}, {2, 5}, {3, 6}});
  Tableau t2(n, {{3, 4}, {1, 5}, {2, 6}});
  REQUIRE(t.valid_for(field));
  REQUIRE(t2.valid_for(field));
  REQUIRE(row_wise_equal(t, t2));

  CHECK(enumerate_swaps(t, field).empty());
  CHECK(enumerate_swaps(t2, field).empty());

  auto res = quadratic_equivalent(t, t2, field);
  CHECK_FALSE(res.equivalent);
  CHECK(res.explored == 1);  // the search space was exhausted immediately
}

TEST_CASE("swaps: single-column and identical tableaux") {
  MatchingField b0 = MatchingField::block(3, 0);
  CHECK(enumerate_swaps(Tableau(3, {{1, 2}}), b0).empty());
  // two singleton columns: the exchange reproduces the same multiset
  CHECK(enumerate_swaps(Tableau(3, {{1}, {2}}), b0).empty());
}

TEST_CASE("swap symmetry") {
  for (int ell = 0; ell <= 4; ++ell) {
    MatchingField field = MatchingField::block(4, ell);
    auto subsets = all_proper_subsets(4);
    for (size_t i = 0; i < subsets.size(); ++i) {
      for (size_t j = i; j < subsets.size(); ++j) {
        Tableau t(4, {field.column(subsets[i]), field.column(subsets[j])});
        for (const Tableau& nb : enumerate_swaps(t, field)) {
          auto back = enumerate_swaps(nb, field);
          CHECK(std::find(back.begin(), back.end(), t.canonical()) != back.end());
        }
      }
    }
  }
}

TEST_CASE("quadratic equivalence basics") {
  MatchingField field = MatchingField::block(6, 3);
  Tableau t(6, {{1}, {4, 1, 6}, {2, 3, 5, 6}, {5, 2}, {2, 3, 4, 5}, {4, 2, 5, 6}});
  Tableau t2(6, {{1, 2, 4, 5}, {2, 3, 5, 6}, {2, 3}, {5}, {4, 1, 5, 6}, {4, 2, 6}});

  auto self = quadratic_equivalent(t, t, field);
  CHECK(self.equivalent);
  CHECK(self.path.size() == 1);  // empty swap sequence

  auto res = quadratic_equivalent(t, t2, field);
  CHECK(res.equivalent);
  REQUIRE(res.path.size() >= 2);
  CHECK(res.path.front() == t);
  CHECK(res.path.back() == t2);
  // each step is a genuine swap neighbor
  for (size_t i = 0; i + 1 < res.path.size(); ++i) {
    auto nbs = enumerate_swaps(res.path[i], field);
    CHECK(std::find(nbs.begin(), nbs.end(), res.path[i + 1].canonical()) != nbs.end());
  }

  CHECK_THROWS_AS(quadratic_equivalent(Tableau(6, {{1}}), Tableau(6, {{2}}), field),
                  NotRowWiseEqual);
}

TEST_CASE("equivalence relation on small classes") {
  // exhaustive over all classes with <= 4 columns for n = 4: BFS answers
  // must define a partition consistent with connected components
  for (int ell = 0; ell <= 4; ++ell) {
    MatchingField field = MatchingField::block(4, ell);
    auto subsets = all_proper_subsets(4);
    std::vector<Tableau> reps;
    for (size_t i = 0; i < subsets.size(); ++i)
      for (size_t j = i; j < subsets.size(); ++j)
        for (size_t k = j; k < subsets.size(); ++k)
          reps.push_back(Tableau(
              4, {field.column(subsets[i]), field.column(subsets[j]), field.column(subsets[k])}));
    for (const Tableau& t : reps) {
      auto cls = row_class(t, field);
      // component labels via repeated BFS over swap neighbors
      std::vector<int> comp(cls.size(), -1);
      for (size_t a = 0; a < cls.size(); ++a) {
        if (comp[a] >= 0) continue;
        for (size_t b = 0; b < cls.size(); ++b)
          if (comp[b] < 0 && quadratic_equivalent(cls[a], cls[b], field).equivalent)
            comp[b] = static_cast<int>(a);
      }
      // reflexive, symmetric, transitive: equivalence agrees with the
      // component partition on every pair
      for (size_t a = 0; a < cls.size(); ++a) {
        CHECK(quadratic_equivalent(cls[a], cls[a], field).equivalent);
        for (size_t b = a + 1; b < cls.size(); ++b) {
          bool ab = quadratic_equivalent(cls[a], cls[b], field).equivalent;
          bool ba = quadratic_equivalent(cls[b], cls[a], field).equivalent;
          CHECK(ab == ba);
          CHECK(ab == (comp[a] == comp[b]));
        }
      }
    }
  }
}

TEST_CASE("row class enumeration matches brute force for two columns") {
  MatchingField field = MatchingField::block(5, 2);
  Tableau t(5, {field.column(Subset(5, {1, 3, 4})), field.column(Subset(5, {2, 4}))});
  auto cls = row_class(t, field);
  CHECK(std::find(cls.begin(), cls.end(), t.canonical()) != cls.end());
  for (const Tableau& member : cls) {
    CHECK(member.valid_for(field));
    CHECK(row_wise_equal(member, t));
  }
  // brute force: all two-column tableaux with the same row multisets
  size_t count = 0;
  for (const Subset& a : all_proper_subsets(5)) {
    for (const Subset& b : all_proper_subsets(5)) {
      if (subset_index(b) < subset_index(a)) continue;
      Tableau cand(5, {field.column(a), field.column(b)});
      if (row_wise_equal(cand, t)) ++count;
    }
  }
  CHECK(cls.size() == count);
}
