#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matchfield/assignment.hpp"
#include "matchfield/errors.hpp"
#include "matchfield/weights.hpp"

using namespace mf;

namespace {

std::vector<long> as_longs(const WeightVector& w) {
  std::vector<long> out;
  for (const Rat& q : w.weights) out.push_back(static_cast<long>(q));
  return out;
}

}  // namespace

TEST_CASE("printed weight matrices") {
  WeightMatrix m30 = weight_matrix_block(3, 0);
  CHECK(m30.entries == std::vector<std::vector<Rat>>{{0, 0, 0}, {3, 2, 1}, {6, 4, 2}});
  WeightMatrix m31 = weight_matrix_block(3, 1);
  CHECK(m31.entries == std::vector<std::vector<Rat>>{{0, 0, 0}, {1, 3, 2}, {6, 4, 2}});
  WeightMatrix m32 = weight_matrix_block(3, 2);
  CHECK(m32.entries == std::vector<std::vector<Rat>>{{0, 0, 0}, {2, 1, 3}, {6, 4, 2}});
  WeightMatrix m43 = weight_matrix_block(4, 3);
  CHECK(m43.entries == std::vector<std::vector<Rat>>{
                           {0, 0, 0, 0}, {3, 2, 1, 4}, {8, 6, 4, 2}, {12, 9, 6, 3}});
  CHECK_THROWS_AS(weight_matrix_block(4, 5), std::out_of_range);
  CHECK_THROWS_AS(weight_matrix_block(1, 0), std::out_of_range);
}

TEST_CASE("initial terms of the n=4 example") {
  WeightMatrix m = weight_matrix_block(4, 3);

  InitialTermReport p24 = initial_term(m, Subset(4, {2, 4}));
  CHECK(p24.sigma == Perm::transposition12(2));
  CHECK(p24.weight == 2);
  CHECK(p24.sign == -1);
  CHECK(p24.exponent == ExponentMatrix::of_column(4, {4, 2}));  // x14 x22

  InitialTermReport p124 = initial_term(m, Subset(4, {1, 2, 4}));
  CHECK(p124.sigma == Perm::identity(3));
  CHECK(p124.exponent == ExponentMatrix::of_column(4, {1, 2, 4}));  // x11 x22 x34
  CHECK(p124.weight == 4);

  // singleton: 1x1 assignment, weight from the zero first row
  InitialTermReport p3 = initial_term(m, Subset(4, {3}));
  CHECK(p3.weight == 0);
  CHECK(p3.sign == 1);
  CHECK(p3.exponent == ExponentMatrix::of_column(4, {3}));
}

TEST_CASE("ties raise NonGenericWeight") {
  WeightMatrix zeros;
  zeros.n = 3;
  zeros.entries.assign(3, std::vector<Rat>(3, Rat(0)));
  CHECK_THROWS_AS(initial_term(zeros, Subset(3, {1, 2})), NonGenericWeight);
  CHECK_THROWS_AS(initial_term_assignment(zeros, Subset(3, {1, 2})), NonGenericWeight);
  CHECK_FALSE(induces(zeros, MatchingField::diagonal(3)).induces);
  CHECK_FALSE(induces(zeros, MatchingField::block(3, 1)).induces);
}

TEST_CASE("exhaustive and assignment paths agree everywhere") {
  for (int n = 2; n <= 7; ++n) {
    for (int ell = 0; ell <= n; ++ell) {
      WeightMatrix m = weight_matrix_block(n, ell);
      for (const Subset& I : all_proper_subsets(n)) {
        InitialTermReport slow = initial_term_exhaustive(m, I);
        InitialTermReport fast = initial_term_assignment(m, I);
        REQUIRE(slow.sigma == fast.sigma);
        REQUIRE(slow.weight == fast.weight);
        REQUIRE(slow.exponent == fast.exponent);
      }
    }
  }
}

TEST_CASE("assignment agrees with brute force on random rational costs") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 6;
    std::vector<std::vector<Rat>> cost(k, std::vector<Rat>(k));
    for (auto& row : cost)
      for (auto& c : row) c = Rat(num(rng), den(rng));

    AssignmentResult got = min_cost_assignment(cost);
    // brute force optimum
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    Rat best;
    bool have = false;
    do {
      Rat w = 0;
      for (int i = 0; i < k; ++i) w += cost[i][perm[i]];
      if (!have || w < best) {
        best = w;
        have = true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(got.cost == best);

    auto second = second_best_assignment(cost, got.row_to_col);
    if (k >= 2) {
      // brute-force second distinct assignment value
      std::vector<int> id(k);
      for (int i = 0; i < k; ++i) id[i] = i;
      Rat second_brute;
      bool have2 = false;
      do {
        if (id == got.row_to_col) continue;
        Rat w = 0;
        for (int i = 0; i < k; ++i) w += cost[i][id[i]];
        if (!have2 || w < second_brute) {
          second_brute = w;
          have2 = true;
        }
      } while (std::next_permutation(id.begin(), id.end()));
      REQUIRE(second.has_value());
      CHECK(*second == second_brute);
    }
  }
}

TEST_CASE("block matrices induce their block fields") {
  for (int n = 2; n <= 7; ++n) {
    for (int ell = 0; ell <= n; ++ell) {
      WeightMatrix m = weight_matrix_block(n, ell);
      MatchingField field = MatchingField::block(n, ell);
      InducesReport rep = induces(m, field);
      CHECK(rep.induces);
      CHECK(rep.diagnostics.empty());
    }
  }
  // the minimizing permutation follows the block rule on every subset
  for (int n = 2; n <= 7; ++n) {
    for (int ell = 0; ell <= n; ++ell) {
      WeightMatrix m = weight_matrix_block(n, ell);
      for (const Subset& I : all_proper_subsets(n))
        CHECK(initial_term(m, I).sigma == block_diagonal_permutation(I, ell));
    }
  }
}

TEST_CASE("weight vectors from the worked examples") {
  CHECK(as_longs(weight_vector(weight_matrix_block(4, 3))) ==
        std::vector<long>{0, 0, 0, 0, 2, 1, 3, 1, 2, 1, 6, 4, 3, 3});
  CHECK(as_longs(weight_vector(weight_matrix_block(3, 0))) ==
        std::vector<long>{0, 0, 0, 2, 1, 1});
  CHECK(as_longs(weight_vector(weight_matrix_block(3, 1))) ==
        std::vector<long>{0, 0, 0, 1, 1, 2});
  CHECK(as_longs(weight_vector(weight_matrix_block(3, 2))) ==
        std::vector<long>{0, 0, 0, 1, 2, 1});

  // restriction of the n=4 vector to proper subsets of {1,2,3}
  WeightVector w4 = weight_vector(weight_matrix_block(4, 3));
  std::vector<long> restricted;
  for (size_t i = 0; i < w4.subsets.size(); ++i)
    if (!w4.subsets[i].contains(4) && w4.subsets[i].size() < 3)
      restricted.push_back(static_cast<long>(w4.weights[i]));
  CHECK(restricted == std::vector<long>{0, 0, 0, 2, 1, 1});

  // lookup by subset
  CHECK(w4.at(Subset(4, {1, 4})) == 3);
  CHECK(w4.at(Subset(4, {2})) == 0);
}

TEST_CASE("coherence scans match the simple path") {
  for (int n : {3, 5}) {
    for (int ell = 0; ell <= n; ++ell) {
      WeightMatrix m = weight_matrix_block(n, ell);
      MatchingField field = MatchingField::block(n, ell);
      CoherenceScan scan = coherence_scan_serial(m, field);
      CHECK(scan.induces);
      CHECK(scan.paths_agree);
      CHECK(scan.diagnostics.empty());
    }
  }
}
