#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "matchfield/pideal.hpp"
#include "matchfield/standard_basis.hpp"
#include "matchfield/swaps.hpp"
#include "matchfield/xpoly.hpp"

using namespace mf;

TEST_CASE("rectangular classification examples") {
  // first four rows of the worked example over (1|2...8)
  Tableau t1(8, {{4, 1, 5, 6}, {2, 3, 4, 7}});
  GrClassification c = classify_gr(t1, 1);
  CHECK(c.tag() == "3B(3)");
  CHECK(c.left == std::vector<int>{4, 1, 5, 6});
  CHECK(c.right == std::vector<int>{2, 3, 4, 7});

  // semi-standard rectangular tableaux with dominated rows are type 1
  Tableau dominated(5, {{1, 2, 4}, {2, 3, 5}});
  CHECK(classify_gr(dominated, 0).tag() == "1");
  CHECK(s_gr(dominated, 0).as_tableau() == dominated);

  // both columns (12)-arranged and dominated: type 2
  Tableau both_swapped(5, {{4, 1}, {5, 2}});
  CHECK(classify_gr(both_swapped, 2).tag() == "2");
  // a rectangular tableau violating every side condition
  Tableau bad(5, {{2, 5}, {3, 4}});  // neither column dominates under ell = 0
  CHECK(classify_gr(bad, 0).tag() == "NotInBasis");
}

TEST_CASE("rectangular type tags partition the basis for n=5, k=2") {
  for (int ell = 0; ell <= 5; ++ell) {
    std::map<std::string, int> seen;
    for (const Tableau& t : all_two_column_tableaux(5, ell, 2, 2))
      seen[classify_gr(t, ell).tag()]++;
    int in_family = 0;
    for (const auto& [tag, count] : seen)
      if (tag != "NotInBasis") in_family += count;
    // the family is in bijection with 2x2 semi-standard tableaux
    CHECK(in_family == static_cast<int>(all_ssyt(5, 2, 2).size()));
  }
}

TEST_CASE("rectangular map is a bijection onto semi-standard tableaux") {
  for (int n = 2; n <= 6; ++n) {
    for (int ell = 0; ell <= n; ++ell) {
      for (int k = 1; k <= n - 1; ++k) {
        std::set<SSYT> images;
        size_t members = 0;
        for (const Tableau& t : all_two_column_tableaux(n, ell, k, k)) {
          GrClassification c = classify_gr(t, ell);
          if (!c.in_basis()) continue;
          ++members;
          SSYT u = s_gr(t, ell);
          REQUIRE(u.valid());
          CHECK(images.insert(u).second);  // no repeats
          CHECK(s_gr_inverse(u, ell) == t);
        }
        auto ssyt = all_ssyt(n, k, k);
        CHECK(members == ssyt.size());
        for (const SSYT& u : ssyt) {
          CHECK(images.count(u) == 1);
          Tableau pre = s_gr_inverse(u, ell);
          CHECK(classify_gr(pre, ell).in_basis());
          CHECK(s_gr(pre, ell) == u);
        }
      }
    }
  }
}

TEST_CASE("flag classification examples") {
  CHECK(classify_flag(Tableau(8, {{4, 1, 5, 6}, {2, 3, 4, 7}}), 1).tag() == "1.3B(3)");
  CHECK(classify_flag(Tableau(8, {{4, 1, 5, 6, 7, 8}, {2, 3, 4, 7}}), 1).tag() == "2.3B(3)");
  CHECK(classify_flag(Tableau(8, {{2, 1, 5, 6}, {1}}), 1).tag() == "3D");
  CHECK(classify_flag(Tableau(6, {{2, 1, 5, 6}, {1}}), 1).tag() == "3D");
  // single columns are never in the two-column family
  CHECK(classify_flag(Tableau(6, {{1, 2}}), 1).tag() == "NotInBasis");

  // type 3 subtypes over (123|456)
  const int ell = 3;
  CHECK(classify_flag(Tableau(6, {{1, 3, 4}, {2}}), ell).tag() == "3A(1)");
  CHECK(classify_flag(Tableau(6, {{4, 6}, {5}}), ell).tag() == "3A(2)");
  CHECK(classify_flag(Tableau(6, {{4, 5, 6}, {1}}), ell).tag() == "3B");
  CHECK(classify_flag(Tableau(6, {{4, 1, 6}, {5}}), ell).tag() == "3C");
  CHECK(classify_flag(Tableau(6, {{4, 1, 5}, {2}}), ell).tag() == "3D");
}

TEST_CASE("flag map on the worked examples") {
  const int n = 6, ell = 3;

  // type 3D: S sorts the long column
  Tableau t3d(n, {{4, 1, 6}, {3}});
  REQUIRE(classify_flag(t3d, ell).tag() == "3D");
  SSYT image = s_flag(t3d, ell);
  CHECK(image.left == std::vector<int>{1, 4, 6});
  CHECK(image.right == std::vector<int>{3});
  CHECK(s_flag_inverse(image, ell) == t3d);

  // type 3A(1) is fixed by S
  Tableau t3a(n, {{1, 3, 4}, {2}});
  CHECK(s_flag(t3a, ell).as_tableau() == t3a);

  // type 3B swaps the first row
  Tableau t3b(n, {{4, 5, 6}, {1}});
  SSYT image_b = s_flag(t3b, ell);
  CHECK(image_b.left == std::vector<int>{1, 5, 6});
  CHECK(image_b.right == std::vector<int>{4});
  CHECK(s_flag_inverse(image_b, ell) == t3b);

  // both leading entries in the first block: the inverse is the identity
  SSYT fixed;
  fixed.n = n;
  fixed.left = {1, 2, 5};
  fixed.right = {3};
  CHECK(s_flag_inverse(fixed, ell) == fixed.as_tableau());

  // first-block left entry with second-block partners below and right
  SSYT case3iiia;
  case3iiia.n = n;
  case3iiia.left = {1, 5, 6};
  case3iiia.right = {4};  // v1 < u2: type 3B preimage
  CHECK(s_flag_inverse(case3iiia, ell) == Tableau(n, {{4, 5, 6}, {1}}));
}

TEST_CASE("normalize_to_basis on the spanning-lemma cases") {
  const int n = 6, ell = 3;
  CHECK(normalize_to_basis(Tableau(n, {{2, 3, 4}, {1}}), ell) == Tableau(n, {{1, 3, 4}, {2}}));
  CHECK(normalize_to_basis(Tableau(n, {{5, 1, 6}, {4}}), ell) == Tableau(n, {{4, 1, 6}, {5}}));
  CHECK(normalize_to_basis(Tableau(n, {{5, 6}, {4}}), ell) == Tableau(n, {{4, 6}, {5}}));
  CHECK(normalize_to_basis(Tableau(n, {{4, 2, 5}, {1}}), ell) == Tableau(n, {{1, 2, 5}, {4}}));
  // idempotent on members
  Tableau member(n, {{4, 1, 5}, {2}});
  CHECK(normalize_to_basis(member, ell) == member);
}

TEST_CASE("typed family: independence, spanning, bijection (exhaustive)") {
  for (int n = 2; n <= 6; ++n) {
    for (int ell = 0; ell <= n; ++ell) {
      MatchingField field = MatchingField::block(n, ell);
      size_t family_total = 0;
      for (int s = 1; s <= n - 1; ++s) {
        for (int t = 1; t <= s; ++t) {
          std::vector<Tableau> members;
          std::set<std::string> member_rows;
          std::set<SSYT> images;
          auto tableaux = all_two_column_tableaux(n, ell, s, t);
          for (const Tableau& tab : tableaux) {
            if (!in_basis(tab, ell)) continue;
            members.push_back(tab);
            // (a) no two members are row-wise equal
            CHECK(member_rows.insert(row_signature(tab)).second);
            // (c) the map is injective with a two-sided inverse
            SSYT u = s_flag(tab, ell);
            REQUIRE(u.valid());
            CHECK(images.insert(u).second);
            CHECK(s_flag_inverse(u, ell) == tab);
          }
          family_total += members.size();

          auto ssyt = all_ssyt(n, s, t);
          CHECK(members.size() == ssyt.size());  // cardinality corollary
          for (const SSYT& u : ssyt) {
            CHECK(images.count(u) == 1);
            CHECK(s_flag(s_flag_inverse(u, ell), ell) == u);
          }

          // (b) every tableau normalizes into the family, staying in its
          // row class and fixing members
          for (const Tableau& tab : tableaux) {
            Tableau norm = normalize_to_basis(tab, ell);
            CHECK(in_basis(norm, ell));
            CHECK(row_wise_equal(norm, tab));
            CHECK(normalize_to_basis(norm, ell) == norm);
            // the normal form keeps the monomial's exponent image
            CHECK(phi(field, {tab.column_subset(0), tab.column_subset(1)}).second ==
                  phi(field, {norm.column_subset(0), norm.column_subset(1)}).second);
          }
        }
      }
      // cross-module count: the family size is the degree-2 dimension
      CHECK(family_total == dim_degree2_initial_algebra(field));
    }
  }
}
